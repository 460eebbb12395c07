"""Rational map parsers."""

import json
from typing import Any

from src.domain.entities.rational_map import RationalMap
from src.domain.value_objects.hpoly import HPoly
from src.presentation.parsers.errors import InputSyntaxError
from src.presentation.parsers.polynomial import parse_poly

COMPONENT_COUNT: int = 3
SEPARATOR: str = ";"


def parse_map(text: str) -> RationalMap:
    """Parse an inline map ``f1; f2; f3``.

    Args:
        text (str): three polynomials separated by semicolons.

    Raises:
        InputSyntaxError: wrong number of components.

    Returns:
        RationalMap: map.

    """
    return _from_components(text.split(SEPARATOR))


def parse_map_document(text: str) -> RationalMap:
    """Parse a JSON document with a ``components`` list.

    Args:
        text (str): document content.

    Raises:
        InputSyntaxError: invalid JSON or missing components.

    Returns:
        RationalMap: map.

    """
    try:
        document: Any = json.loads(text)
    except json.JSONDecodeError as error:
        msg: str = f"Invalid JSON: {error.msg}"
        raise InputSyntaxError(msg, position=error.pos) from error

    if not isinstance(document, dict) or not isinstance(
        document.get("components"),
        list,
    ):
        msg = "Map document must be an object with a 'components' list."
        raise InputSyntaxError(msg)

    components: list[Any] = document["components"]

    if not all(isinstance(component, str) for component in components):
        msg = "Map components must be strings."
        raise InputSyntaxError(msg)

    return _from_components(components)


def _from_components(components: list[str]) -> RationalMap:
    if len(components) != COMPONENT_COUNT:
        msg: str = (
            f"A plane map needs {COMPONENT_COUNT} components, "
            f"got {len(components)}."
        )
        raise InputSyntaxError(msg)

    forms: list[HPoly] = [parse_poly(component) for component in components]
    degree: int = max(
        (form.degree for form in forms if not form.is_zero),
        default=0,
    )

    return RationalMap(
        [HPoly.zero(degree) if form.is_zero else form for form in forms],
    )
