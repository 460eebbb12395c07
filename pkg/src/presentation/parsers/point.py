"""Point parsers."""

import re

from sympy import Rational

from src.domain.value_objects.proj_point import ProjPoint
from src.presentation.parsers.errors import InputSyntaxError

RATIONAL: str = r"\s*([+-]?\d+(?:/\d+)?)\s*"
POINT: re.Pattern[str] = re.compile(
    rf"\s*\({RATIONAL}:{RATIONAL}:{RATIONAL}\)\s*",
)
COMMENT: str = "#"


def parse_point(text: str) -> ProjPoint:
    """Parse a point written as ``(a:b:c)``.

    Args:
        text (str): point text with rational entries.

    Raises:
        InputSyntaxError: text is not a point.

    Returns:
        ProjPoint: canonical point; ``(0:0:0)`` raises ``ZeroPointError``.

    """
    match: re.Match[str] | None = POINT.fullmatch(text)

    if match is None:
        msg: str = f"Expected a point like (a:b:c), got {text!r}."
        raise InputSyntaxError(msg, position=0)

    return ProjPoint.of([Rational(group) for group in match.groups()])


def parse_points_file(text: str) -> list[ProjPoint]:
    """Parse a point configuration document.

    One point per line; everything after ``#`` is a comment and blank lines
    are skipped.

    Args:
        text (str): document content.

    Raises:
        InputSyntaxError: a line is not a point.

    Returns:
        list[ProjPoint]: points in file order.

    """
    points: list[ProjPoint] = []

    for number, line in enumerate(text.splitlines(), start=1):
        content: str = line.split(COMMENT, 1)[0].strip()

        if not content:
            continue

        try:
            points.append(parse_point(content))
        except InputSyntaxError as error:
            msg: str = f"Line {number}: {error}"
            raise InputSyntaxError(msg) from error

    return points
