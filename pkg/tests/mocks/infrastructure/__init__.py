"""Infrastructure mocks."""
