"""Random sources."""
