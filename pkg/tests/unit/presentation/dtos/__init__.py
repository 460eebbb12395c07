"""Tests for command line DTOs."""
