"""Tests for application services."""
