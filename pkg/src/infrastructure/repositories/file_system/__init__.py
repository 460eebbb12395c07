"""File system repositories."""
