"""Projective point value object."""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import reduce

from sympy import Rational, igcd, ilcm

from src.domain.exceptions.projective import ZeroPointError
from src.domain.value_objects.homogeneous_form import Scalar


@dataclass(frozen=True, slots=True)
class ProjPoint:
    """Point of the projective plane in canonical coordinates.

    Coordinates are coprime integers with the first nonzero entry positive,
    so dataclass equality is projective equality.
    """

    coordinates: tuple[int, int, int]

    def __post_init__(self) -> None:
        """Canonicalize coordinates.

        Raises:
            ZeroPointError: if all coordinates vanish.

        """
        values: list[Rational] = [
            Rational(value) for value in self.coordinates
        ]

        if all(value == 0 for value in values):
            msg: str = "The point (0:0:0) does not exist."
            raise ZeroPointError(msg)

        denominator: int = reduce(ilcm, (int(value.q) for value in values), 1)
        integers: list[int] = [int(value * denominator) for value in values]
        content: int = reduce(igcd, integers, 0)
        leading: int = next(value for value in integers if value != 0)
        sign: int = -1 if leading < 0 else 1

        object.__setattr__(
            self,
            "coordinates",
            tuple(sign * value // content for value in integers),
        )

    @classmethod
    def of(cls, values: Sequence[Scalar]) -> "ProjPoint":
        """Make new instance from any rational coordinates.

        Args:
            values (Sequence[Scalar]): three coordinates, not all zero.

        Returns:
            ProjPoint: canonical point.

        """
        first, second, third = values
        return cls((first, second, third))  # type: ignore[arg-type]

    @property
    def rationals(self) -> tuple[Rational, Rational, Rational]:
        """Get coordinates as sympy rationals.

        Returns:
            tuple[Rational, Rational, Rational]: coordinates.

        """
        first, second, third = self.coordinates
        return (Rational(first), Rational(second), Rational(third))

    def __str__(self) -> str:
        """Format as ``(a:b:c)``."""
        first, second, third = self.coordinates
        return f"({first}:{second}:{third})"
