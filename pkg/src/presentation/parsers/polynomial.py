"""Polynomial parser.

Grammar: a sum of terms ``[+|-] [c] [*] monomial`` where ``c`` is an
integer or a fraction like ``3/4``, optionally in parentheses, and a
monomial is a product of ``x``, ``y`` and ``z`` with optional ``^k``
exponents. Multiplication signs may be omitted, so ``3x^2y`` is read as
``3*x^2*y``. All terms must share one total degree.
"""

import re
from collections import defaultdict

from sympy import Rational

from src.domain.value_objects.hpoly import HPoly
from src.presentation.parsers.errors import InputSyntaxError

SIGN: re.Pattern[str] = re.compile(r"\s*([+-])")
COEFFICIENT: re.Pattern[str] = re.compile(
    r"\s*(?:\(\s*([+-]?\d+(?:/\d+)?)\s*\)|(\d+(?:/\d+)?))",
)
FACTOR: re.Pattern[str] = re.compile(r"\s*\*?\s*([xyz])(?:\s*\^\s*(\d+))?")
STAR: re.Pattern[str] = re.compile(r"\s*\*")
VARIABLES: str = "xyz"


def parse_poly(text: str) -> HPoly:
    """Parse a homogeneous polynomial.

    Args:
        text (str): polynomial text, e.g. ``x*z - y^2``.

    Raises:
        InputSyntaxError: text does not follow the grammar.

    Returns:
        HPoly: parsed form; inhomogeneous input raises
            ``InhomogeneousPolynomialError``.

    """
    terms: defaultdict[tuple[int, int, int], Rational] = defaultdict(
        lambda: Rational(0),
    )
    degrees: set[int] = set()
    position: int = 0
    first: bool = True

    while position < len(text.rstrip()):
        sign, position = _read_sign(text, position, first=first)
        coefficient, exponents, position = _read_term(text, position)
        terms[exponents] += sign * coefficient
        degrees.add(sum(exponents))
        first = False

    if first:
        msg: str = "Empty polynomial."
        raise InputSyntaxError(msg, position=0)

    degree: int = max(degrees)
    return HPoly.from_terms(degree, dict(terms))


def _read_sign(text: str, position: int, *, first: bool) -> tuple[int, int]:
    match: re.Match[str] | None = SIGN.match(text, position)

    if match is None:
        if not first:
            msg: str = "Expected '+' or '-'."
            raise InputSyntaxError(msg, position=_skip_blank(text, position))

        return 1, position

    return (-1 if match.group(1) == "-" else 1), match.end()


def _read_term(
    text: str,
    position: int,
) -> tuple[Rational, tuple[int, int, int], int]:
    coefficient: Rational = Rational(1)
    exponents: list[int] = [0, 0, 0]
    start: int = _skip_blank(text, position)

    match: re.Match[str] | None = COEFFICIENT.match(text, position)

    if match is not None:
        coefficient = Rational(match.group(1) or match.group(2))
        position = match.end()

    while (factor := FACTOR.match(text, position)) is not None:
        exponents[VARIABLES.index(factor.group(1))] += int(
            factor.group(2) or 1,
        )
        position = factor.end()

    if match is None and exponents == [0, 0, 0]:
        msg: str = "Expected a coefficient or a variable."
        raise InputSyntaxError(msg, position=start)

    if STAR.match(text, position) is not None:
        msg = "Dangling '*'."
        raise InputSyntaxError(msg, position=_skip_blank(text, position))

    return coefficient, (exponents[0], exponents[1], exponents[2]), position


def _skip_blank(text: str, position: int) -> int:
    while position < len(text) and text[position].isspace():
        position += 1

    return position
