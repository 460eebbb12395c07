"""Tests for entities."""
