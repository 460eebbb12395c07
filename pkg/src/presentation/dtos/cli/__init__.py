"""Command line data transfer objects."""
