"""Tests code."""
