"""Command line controller."""
