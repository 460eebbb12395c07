"""Tests for value objects."""
