"""Tests for presentation."""
