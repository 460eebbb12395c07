"""Plane reduction value object."""

from dataclasses import dataclass

from src.domain.value_objects.elementary_step import ElementaryStep


@dataclass(frozen=True, slots=True)
class PlaneReduction:
    """Outcome of reducing a conic bundle model to a plane involution.

    Contracting E_1 maps the fixed curve of genus g to a plane curve of
    degree ``g + 2`` with an ordinary g-fold point at the center.
    """

    genus: int
    plane_degree: int
    center_multiplicity: int
    steps: tuple[ElementaryStep, ...]
