"""Picard lattice entity."""

from typing import Self

from sympy import ImmutableMatrix, diag

from src.domain.value_objects.div_class import DivClass
from src.domain.value_objects.lattice_kind import LatticeKind


class PicLattice:
    """Picard lattice with intersection form and canonical class."""

    def __init__(
        self,
        kind: LatticeKind,
        gram: ImmutableMatrix,
        canonical: DivClass,
    ) -> None:
        """Create new instance.

        Args:
            kind (LatticeKind): blow-up of the plane or the quadric.
            gram (ImmutableMatrix): intersection form in the basis.
            canonical (DivClass): canonical class K.

        """
        self.kind: LatticeKind = kind
        self.gram: ImmutableMatrix = gram
        self.canonical: DivClass = canonical
        self._form: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(entry) for entry in gram.row(row))
            for row in range(gram.rows)
        )

    @classmethod
    def blow_up(cls, points: int) -> Self:
        """Make the lattice of the plane blown up at points.

        The basis is ``H, E1, ..., En`` with form ``diag(1, -1, ..., -1)``
        and ``K = -3H + E1 + ... + En``.

        Args:
            points (int): number n of blown up points.

        Returns:
            Self: lattice of rank n + 1.

        """
        return cls(
            kind=LatticeKind.blow_up,
            gram=ImmutableMatrix(diag(1, *([-1] * points))),
            canonical=DivClass((-3, *([1] * points))),
        )

    @classmethod
    def quadric(cls) -> Self:
        """Make the lattice of the quadric P1 x P1.

        The basis is the two rulings, with form ``[[0, 1], [1, 0]]`` and
        ``K = (-2, -2)``.

        Returns:
            Self: rank 2 lattice.

        """
        return cls(
            kind=LatticeKind.quadric,
            gram=ImmutableMatrix([[0, 1], [1, 0]]),
            canonical=DivClass((-2, -2)),
        )

    @property
    def rank(self) -> int:
        """Get rank.

        Returns:
            int: number of basis classes.

        """
        return len(self._form)

    @property
    def points(self) -> int:
        """Get number of blown up points.

        Returns:
            int: n, zero for the quadric.

        """
        if self.kind is LatticeKind.quadric:
            return 0

        return self.rank - 1

    @property
    def k_squared(self) -> int:
        """Get the degree ``K^2``.

        Returns:
            int: self-intersection of K.

        """
        return self.dot(self.canonical, self.canonical)

    def dot(self, first: DivClass, second: DivClass) -> int:
        """Get the intersection number of two classes.

        Args:
            first (DivClass): first class.
            second (DivClass): second class.

        Returns:
            int: intersection number.

        """
        return sum(
            self._form[row][column]
            * first.coordinates[row]
            * second.coordinates[column]
            for row in range(self.rank)
            for column in range(self.rank)
            if self._form[row][column]
        )

    def square(self, divisor: DivClass) -> int:
        """Get the self-intersection of a class.

        Args:
            divisor (DivClass): class.

        Returns:
            int: self-intersection.

        """
        return self.dot(divisor, divisor)

    def basis(self) -> list[DivClass]:
        """Get the basis classes.

        Returns:
            list[DivClass]: basis.

        """
        return [DivClass.basis(self.rank, index) for index in range(self.rank)]

    def __eq__(self, other: object) -> bool:
        """Check equality of kind and form."""
        if not isinstance(other, PicLattice):
            return NotImplemented

        return self.kind == other.kind and self._form == other._form

    def __hash__(self) -> int:
        """Hash kind and form."""
        return hash((self.kind, self._form))

    def __repr__(self) -> str:
        """Format for debugging."""
        return f"PicLattice({self.kind}, rank={self.rank})"
