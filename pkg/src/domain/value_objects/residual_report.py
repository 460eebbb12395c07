"""Residual point bookkeeping value object."""

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class ResidualReport:
    """Degree accounting of one elimination-based evaluation.

    The eliminant of degree ``total_degree`` splits as the known factors,
    ``known_degrees`` per removed point, times a residual form.
    """

    total_degree: int
    known_degrees: tuple[int, ...]
    residual_degree: int
    attempts: int
    candidates: int = 1

    @property
    def is_balanced(self) -> bool:
        """Check the degree identity.

        Returns:
            bool: True if known and residual degrees add up.

        """
        return (
            sum(self.known_degrees) + self.residual_degree
            == self.total_degree
        )
