"""Unit tests code."""
