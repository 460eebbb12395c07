"""Command line views."""
