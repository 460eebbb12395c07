"""Integration tests code."""
