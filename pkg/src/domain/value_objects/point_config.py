"""Point configuration value object."""

from dataclasses import dataclass, field

from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.proj_point import ProjPoint


@dataclass(frozen=True, slots=True)
class ConfigurationReport:
    """Outcome of the general position rank checks."""

    pairwise_distinct: bool
    no_three_collinear: bool
    system_dimension: int
    expected_dimension: int

    @property
    def is_valid(self) -> bool:
        """Check all flags.

        Returns:
            bool: True if the configuration passed every check.

        """
        return (
            self.pairwise_distinct
            and self.no_three_collinear
            and self.system_dimension == self.expected_dimension
        )


@dataclass(frozen=True, slots=True)
class PointConfig:
    """Seven or eight points in general position with their linear system.

    ``system`` holds the basis of the cubics (Geiser) or singular sextics
    (Bertini) computed during validation.
    """

    points: tuple[ProjPoint, ...]
    report: ConfigurationReport
    system: tuple[HPoly, ...] = field(default=(), compare=False)

    @property
    def size(self) -> int:
        """Get number of points.

        Returns:
            int: 7 or 8.

        """
        return len(self.points)
