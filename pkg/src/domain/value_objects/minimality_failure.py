"""Minimality failure value object."""

from enum import StrEnum


class MinimalityFailure(StrEnum):
    """Which half of the minimality test an exceptional class failed."""

    fixed = "sigma-fixes-class"
    disjoint = "disjoint-from-image"
