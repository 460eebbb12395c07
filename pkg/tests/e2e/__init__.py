"""End-to-end tests code."""
