"""Lattice involution entity."""

from collections.abc import Sequence
from typing import Self

from sympy import ImmutableMatrix, Matrix, eye, zeros

from src.domain.entities.pic_lattice import PicLattice
from src.domain.exceptions.lattice import InvalidLatticeInvolutionError
from src.domain.value_objects.div_class import DivClass


class LatticeInvolution:
    """Integral matrix acting on a Picard lattice.

    Columns are the images of the basis classes.
    """

    def __init__(self, lattice: PicLattice, matrix: ImmutableMatrix) -> None:
        """Create new instance.

        Args:
            lattice (PicLattice): lattice acted on.
            matrix (ImmutableMatrix): square integer matrix of its rank.

        Raises:
            InvalidLatticeInvolutionError: if the shape or entries are wrong.

        """
        if matrix.shape != (lattice.rank, lattice.rank):
            msg: str = (
                f"Matrix of shape {matrix.shape} does not act on a lattice "
                f"of rank {lattice.rank}."
            )
            raise InvalidLatticeInvolutionError(msg)

        if any(not entry.is_integer for entry in matrix):
            msg = "Lattice involutions have integer entries."
            raise InvalidLatticeInvolutionError(msg)

        self.lattice: PicLattice = lattice
        self.matrix: ImmutableMatrix = matrix
        self._rows: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(entry) for entry in matrix.row(row))
            for row in range(matrix.rows)
        )

    @classmethod
    def identity(cls, lattice: PicLattice) -> Self:
        """Make the identity action.

        Args:
            lattice (PicLattice): lattice.

        Returns:
            Self: identity.

        """
        return cls(lattice, ImmutableMatrix(eye(lattice.rank)))

    @classmethod
    def from_images(
        cls,
        lattice: PicLattice,
        images: Sequence[DivClass],
    ) -> Self:
        """Make an action from the images of the basis classes.

        Args:
            lattice (PicLattice): lattice.
            images (Sequence[DivClass]): image of each basis class.

        Returns:
            Self: action with the images as columns.

        """
        return cls(
            lattice,
            ImmutableMatrix(
                lattice.rank,
                lattice.rank,
                lambda row, column: images[column].coordinates[row],
            ),
        )

    def apply(self, divisor: DivClass) -> DivClass:
        """Get the image of a class.

        Args:
            divisor (DivClass): class.

        Returns:
            DivClass: image.

        """
        return DivClass(
            tuple(
                sum(
                    entry * value
                    for entry, value in zip(
                        row,
                        divisor.coordinates,
                        strict=True,
                    )
                )
                for row in self._rows
            ),
        )

    def is_isometry(self) -> bool:
        """Check ``M^T G M = G``.

        Returns:
            bool: True if the form is preserved.

        """
        gram: ImmutableMatrix = self.lattice.gram
        return self.matrix.T * gram * self.matrix == gram

    def is_involutive(self) -> bool:
        """Check ``M^2 = I``.

        Returns:
            bool: True if the square is the identity.

        """
        return self.matrix * self.matrix == eye(self.lattice.rank)

    def fixes_canonical(self) -> bool:
        """Check ``M K = K``.

        Returns:
            bool: True if K is fixed.

        """
        return self.apply(self.lattice.canonical) == self.lattice.canonical

    def validate(self) -> None:
        """Check the three defining identities.

        Raises:
            InvalidLatticeInvolutionError: naming the failed identities.

        """
        failures: list[str] = [
            name
            for name, passed in (
                ("isometry", self.is_isometry()),
                ("involution", self.is_involutive()),
                ("canonical class", self.fixes_canonical()),
            )
            if not passed
        ]

        if failures:
            msg: str = f"Matrix fails: {', '.join(failures)}."
            raise InvalidLatticeInvolutionError(msg)

    def permuted(self, permutation: Sequence[int]) -> Self:
        """Conjugate by a relabelling of the exceptional classes.

        Args:
            permutation (Sequence[int]): new position of ``E(i+1)`` for each
                i, zero-based among the exceptional classes.

        Returns:
            Self: conjugated action ``P M P^-1``.

        """
        relabel: Matrix = zeros(self.lattice.rank, self.lattice.rank)
        relabel[0, 0] = 1

        for source, target in enumerate(permutation):
            relabel[target + 1, source + 1] = 1

        frame: ImmutableMatrix = ImmutableMatrix(relabel)

        return type(self)(
            self.lattice,
            ImmutableMatrix(frame * self.matrix * frame.T),
        )

    def rows(self) -> list[list[int]]:
        """Get integer rows.

        Returns:
            list[list[int]]: row-major entries.

        """
        return [list(row) for row in self._rows]

    def __eq__(self, other: object) -> bool:
        """Check equal lattice and matrix."""
        if not isinstance(other, LatticeInvolution):
            return NotImplemented

        return self.lattice == other.lattice and self._rows == other._rows

    def __hash__(self) -> int:
        """Hash lattice and matrix."""
        return hash((self.lattice, self._rows))
