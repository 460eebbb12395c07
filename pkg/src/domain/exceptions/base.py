"""Base domain exception."""


class DomainValidationError(Exception):
    """Input or intermediate data violates a mathematical precondition.

    Every subclass carries a short machine-readable ``reason`` slug which the
    command line reports next to the human message.
    """

    reason: str = "invalid-input"

    def __init__(self, message: str, reason: str | None = None) -> None:
        """Create new instance.

        Args:
            message (str): human readable message.
            reason (str | None, optional): reason slug overriding the class
                default. Defaults to None.

        """
        super().__init__(message)

        if reason is not None:
            self.reason = reason
