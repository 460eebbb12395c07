"""Input parsers."""
