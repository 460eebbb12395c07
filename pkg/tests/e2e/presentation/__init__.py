"""Presentation layer end-to-end tests code."""
