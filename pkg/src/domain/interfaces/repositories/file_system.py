"""File system repository interface."""

from pathlib import Path
from typing import Protocol


class IFileSystem(Protocol):
    """Read-only access to input documents."""

    def read_text(self, path: Path) -> str:
        """Read a text document.

        Args:
            path (Path): document path.

        Returns:
            str: document content.

        """
        ...

    def history(self) -> list[Path]:
        """Get paths read so far.

        Returns:
            list[Path]: history.

        """
        ...
