"""Divisor class value object."""

from dataclasses import dataclass
from typing import Self


@dataclass(frozen=True, slots=True)
class DivClass:
    """Integer coordinates of a divisor class.

    On a blow-up of the plane the coordinates ``(a, c1, ..., cn)`` stand for
    ``a*H + c1*E1 + ... + cn*En``; on the quadric they are the two rulings.
    The pairing lives on the lattice, not here.
    """

    coordinates: tuple[int, ...]

    @classmethod
    def basis(cls, rank: int, index: int) -> Self:
        """Make a basis vector.

        Args:
            rank (int): lattice rank.
            index (int): position of the unit entry.

        Returns:
            Self: basis class.

        """
        return cls(tuple(int(position == index) for position in range(rank)))

    @property
    def rank(self) -> int:
        """Get number of coordinates.

        Returns:
            int: rank of the ambient lattice.

        """
        return len(self.coordinates)

    def __add__(self, other: Self) -> Self:
        """Add classes."""
        return type(self)(
            tuple(
                first + second
                for first, second in zip(
                    self.coordinates,
                    other.coordinates,
                    strict=True,
                )
            ),
        )

    def __sub__(self, other: Self) -> Self:
        """Subtract classes."""
        return self + (-other)

    def __neg__(self) -> Self:
        """Negate."""
        return type(self)(tuple(-value for value in self.coordinates))

    def __rmul__(self, factor: int) -> Self:
        """Multiply by an integer."""
        return type(self)(tuple(factor * value for value in self.coordinates))

    def __str__(self) -> str:
        """Format in the blow-up basis, e.g. ``2H - E1 - E2``."""
        names: list[str] = [
            "H",
            *(f"E{index}" for index in range(1, self.rank)),
        ]
        pieces: list[str] = []

        for name, value in zip(names, self.coordinates, strict=True):
            if value == 0:
                continue

            magnitude: str = "" if abs(value) == 1 else str(abs(value))

            if not pieces:
                pieces.append(f"{'-' if value < 0 else ''}{magnitude}{name}")
            else:
                pieces.append(
                    f" {'-' if value < 0 else '+'} {magnitude}{name}",
                )

        return "".join(pieces) or "0"
