"""Exit code util."""

from enum import IntEnum


class ExitCode(IntEnum):
    """Exit code choices."""

    success = 0
    internal_error = 1
    validation_failure = 2
