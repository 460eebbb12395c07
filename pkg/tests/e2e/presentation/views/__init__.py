"""Views end-to-end tests code."""
