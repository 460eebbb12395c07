"""Tests for repositories."""
