"""Fake file system repository."""

from pathlib import Path

from src.domain.interfaces.repositories.file_system import IFileSystem


class FakeFileSystem(IFileSystem):
    """In-memory file system."""

    def __init__(self, documents: dict[Path, str] | None = None) -> None:
        """Create new instance.

        Args:
            documents (dict[Path, str] | None, optional): path to content
                mapping. Defaults to None.

        """
        self._documents: dict[Path, str] = dict(documents or {})
        self._memory: list[Path] = []

    def read_text(self, path: Path) -> str:
        """Read a text document.

        Args:
            path (Path): document path.

        Raises:
            FileNotFoundError: unknown path.

        Returns:
            str: document content.

        """
        self._memory.append(path)

        try:
            return self._documents[path]
        except KeyError:
            msg: str = f"No such document: {path}"
            raise FileNotFoundError(msg) from None

    def history(self) -> list[Path]:
        """Get paths read so far.

        Returns:
            list[Path]: history.

        """
        return self._memory
