"""Random source mocks."""
