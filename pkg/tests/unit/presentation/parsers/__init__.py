"""Tests for input parsers."""
