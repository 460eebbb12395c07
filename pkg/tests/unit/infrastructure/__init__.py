"""Tests for infrastructure."""
