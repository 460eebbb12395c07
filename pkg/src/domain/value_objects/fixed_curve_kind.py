"""Fixed curve kind value object."""

from enum import StrEnum


class FixedCurveKind(StrEnum):
    """Isomorphism type of a normalized fixed curve."""

    empty = "empty"
    hyperelliptic = "hyperelliptic"
    non_hyperelliptic_genus_3 = "non-hyperelliptic-genus-3"
    non_hyperelliptic_genus_4 = "non-hyperelliptic-genus-4-on-singular-quadric"
