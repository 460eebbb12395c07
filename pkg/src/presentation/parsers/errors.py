"""Parser exceptions."""

from src.domain.exceptions.base import DomainValidationError


class InputSyntaxError(DomainValidationError):
    """Text does not follow the input grammar."""

    reason = "syntax"

    def __init__(self, message: str, position: int | None = None) -> None:
        """Create new instance.

        Args:
            message (str): human readable message.
            position (int | None, optional): zero-based character offset.
                Defaults to None.

        """
        if position is not None:
            message = f"{message} (at position {position})"

        super().__init__(message)
        self.position: int | None = position
