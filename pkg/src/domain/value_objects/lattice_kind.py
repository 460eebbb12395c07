"""Lattice kind value object."""

from enum import StrEnum


class LatticeKind(StrEnum):
    """Surface whose Picard lattice is modelled."""

    blow_up = "blow-up"
    quadric = "quadric"
