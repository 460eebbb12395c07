"""Involution matrix parser."""

from src.presentation.parsers.errors import InputSyntaxError


def parse_matrix_file(text: str) -> list[list[int]]:
    """Parse a row-major integer matrix.

    The first line holds the rank ``r``; the remaining whitespace separated
    tokens are the ``r * r`` entries.

    Args:
        text (str): document content.

    Raises:
        InputSyntaxError: malformed header, entry or entry count.

    Returns:
        list[list[int]]: rows.

    """
    lines: list[str] = text.strip().splitlines()

    if not lines:
        msg: str = "Empty matrix document."
        raise InputSyntaxError(msg)

    rank: int = _to_int(lines[0].strip(), "rank")

    if rank < 1:
        msg = f"Matrix rank must be positive, got {rank}."
        raise InputSyntaxError(msg)

    entries: list[int] = [
        _to_int(token, "entry") for line in lines[1:] for token in line.split()
    ]

    if len(entries) != rank * rank:
        msg = f"Expected {rank * rank} entries, got {len(entries)}."
        raise InputSyntaxError(msg)

    return [entries[row * rank : (row + 1) * rank] for row in range(rank)]


def _to_int(token: str, name: str) -> int:
    try:
        return int(token)
    except ValueError:
        msg: str = f"Matrix {name} {token!r} is not an integer."
        raise InputSyntaxError(msg) from None
