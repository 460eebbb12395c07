"""Command line view end-to-end tests."""
