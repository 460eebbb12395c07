"""Presentation utils."""
