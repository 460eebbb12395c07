"""Local file system repository."""

import logging
from pathlib import Path

from src.domain.interfaces.repositories.file_system import IFileSystem

logger: logging.Logger = logging.getLogger(__name__)


class LocalFileSystem(IFileSystem):
    """Local file system."""

    def __init__(self) -> None:
        """Create new instance."""
        self._memory: list[Path] = []

    def read_text(self, path: Path) -> str:
        """Read a UTF-8 text document.

        Args:
            path (Path): document path.

        Returns:
            str: document content.

        """
        logger.debug("Reading %s", path)
        self._memory.append(path)
        return path.read_text(encoding="utf-8")

    def history(self) -> list[Path]:
        """Get paths read so far.

        Returns:
            list[Path]: history.

        """
        return self._memory
