"""Minimality result value object."""

from dataclasses import dataclass

from src.domain.value_objects.div_class import DivClass
from src.domain.value_objects.minimality_failure import MinimalityFailure


@dataclass(frozen=True, slots=True)
class MinimalityResult:
    """Outcome of the exceptional class test with an optional witness."""

    minimal: bool
    witness: DivClass | None = None
    image: DivClass | None = None
    failure: MinimalityFailure | None = None
    intersection: int | None = None
