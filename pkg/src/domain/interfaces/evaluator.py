"""Point evaluator interface."""

from typing import Protocol

from src.domain.value_objects.proj_point import ProjPoint


class IPointEvaluator(Protocol):
    """Exact pointwise action of an involution."""

    def __call__(self, point: ProjPoint) -> ProjPoint | None:
        """Evaluate at a point.

        Args:
            point (ProjPoint): point of the plane.

        Returns:
            ProjPoint | None: image, or None at a base point.

        """
        ...
