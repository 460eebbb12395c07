"""Picard lattice domain service."""

import logging
from collections.abc import Iterator
from math import isqrt

from sympy import ImmutableMatrix, eye

from src.domain.entities.lattice_involution import LatticeInvolution
from src.domain.entities.pic_lattice import PicLattice
from src.domain.exceptions.lattice import (
    LatticeOutOfScopeError,
    ReflectionRootError,
)
from src.domain.services.exact_algebra import ExactAlgebraService
from src.domain.value_objects.div_class import DivClass
from src.domain.value_objects.lattice_kind import LatticeKind
from src.domain.value_objects.minimality_failure import MinimalityFailure
from src.domain.value_objects.minimality_result import MinimalityResult
from src.domain.value_objects.pair_classification import PairClassification
from src.domain.value_objects.pair_label import PairLabel

logger: logging.Logger = logging.getLogger(__name__)

DEL_PEZZO_LIMIT: int = 8
ROOT_SQUARES: frozenset[int] = frozenset({1, 2})
DEL_PEZZO_DEGREE_2: int = 2
DEL_PEZZO_DEGREE_1: int = 1
QUADRIC_SEARCH_BOX: int = 3

EXCEPTIONAL: tuple[int, int] = (-1, -1)
CONIC: tuple[int, int] = (0, -2)


class PicardService:
    """Reflections, exceptional classes and minimal pair classification."""

    def __init__(self, algebra: ExactAlgebraService | None = None) -> None:
        """Create new instance.

        Args:
            algebra (ExactAlgebraService | None, optional): exact ranks.
                Defaults to None.

        """
        self._algebra: ExactAlgebraService = algebra or ExactAlgebraService()

    def make_lattice(self, points: int) -> PicLattice:
        """Make the lattice of the plane blown up at points.

        Args:
            points (int): n >= 0.

        Raises:
            LatticeOutOfScopeError: if n is negative.

        Returns:
            PicLattice: lattice with ``K^2 = 9 - n``.

        """
        if points < 0:
            msg: str = f"Cannot blow up {points} points."
            raise LatticeOutOfScopeError(msg)

        return PicLattice.blow_up(points)

    def make_quadric_lattice(self) -> PicLattice:
        """Make the lattice of P1 x P1.

        Returns:
            PicLattice: rank 2 hyperbolic lattice.

        """
        return PicLattice.quadric()

    def quadric_swap(self, lattice: PicLattice) -> LatticeInvolution:
        """Make the exchange of the two rulings.

        Args:
            lattice (PicLattice): quadric lattice.

        Returns:
            LatticeInvolution: swap.

        """
        return LatticeInvolution(lattice, ImmutableMatrix([[0, 1], [1, 0]]))

    def dj_quadratic_involution(self) -> LatticeInvolution:
        """Make the action of the quadratic De Jonquieres map on 3 points.

        The center class goes to the line through the two other base
        points; each of those goes to the line joining it to the center.

        Returns:
            LatticeInvolution: action on the rank 4 lattice.

        """
        lattice: PicLattice = PicLattice.blow_up(3)

        return LatticeInvolution.from_images(
            lattice,
            [
                DivClass((2, -1, -1, -1)),
                DivClass((1, 0, -1, -1)),
                DivClass((1, -1, -1, 0)),
                DivClass((1, -1, 0, -1)),
            ],
        )

    def reflection_through(
        self,
        lattice: PicLattice,
        root: DivClass,
    ) -> LatticeInvolution:
        """Make the reflection ``x -> x - 2 (a.x) / (a.a) a``.

        Args:
            lattice (PicLattice): lattice.
            root (DivClass): class a with ``a.a`` in {1, 2}.

        Raises:
            ReflectionRootError: if ``a.a`` is not 1 or 2.

        Returns:
            LatticeInvolution: integral reflection.

        """
        square: int = lattice.square(root)

        if square not in ROOT_SQUARES:
            msg: str = f"Root {root} has square {square}, not 1 or 2."
            raise ReflectionRootError(msg)

        return LatticeInvolution.from_images(
            lattice,
            [
                basis - (2 * lattice.dot(root, basis) // square) * root
                for basis in lattice.basis()
            ],
        )

    def anti_reflection_in_k(self, lattice: PicLattice) -> LatticeInvolution:
        """Make ``x -> -x + 2 (K.x) / K^2 K``.

        Args:
            lattice (PicLattice): lattice with ``K^2`` in {1, 2}.

        Raises:
            LatticeOutOfScopeError: for any other degree.

        Returns:
            LatticeInvolution: involution acting as -1 on the orthogonal of
                K.

        """
        degree: int = lattice.k_squared
        canonical: DivClass = lattice.canonical

        if degree not in ROOT_SQUARES:
            msg: str = f"K^2 = {degree}: anti-reflection is not integral."
            raise LatticeOutOfScopeError(msg)

        return LatticeInvolution.from_images(
            lattice,
            [
                (2 * lattice.dot(canonical, basis) // degree) * canonical
                - basis
                for basis in lattice.basis()
            ],
        )

    def fixed_rank(self, involution: LatticeInvolution) -> int:
        """Get the rank of the invariant sublattice.

        Args:
            involution (LatticeInvolution): action.

        Returns:
            int: dimension of the kernel of ``M - I``.

        """
        rank: int = involution.lattice.rank
        difference: ImmutableMatrix = involution.matrix - eye(rank)

        return rank - self._algebra.rank(difference.tolist(), rank)

    def exceptional_classes(
        self,
        lattice: PicLattice,
        slack: int = 0,
    ) -> list[DivClass]:
        """Enumerate classes with ``E^2 = -1`` and ``K.E = -1``.

        Args:
            lattice (PicLattice): lattice with n <= 8.
            slack (int, optional): widening of the degree bound, used to
                confirm the bound encloses every class. Defaults to 0.

        Raises:
            LatticeOutOfScopeError: if n > 8.

        Returns:
            list[DivClass]: classes sorted by degree, E1 first.

        """
        return self._classes(lattice, EXCEPTIONAL, slack)

    def conic_classes(
        self,
        lattice: PicLattice,
        slack: int = 0,
    ) -> list[DivClass]:
        """Enumerate classes with ``F^2 = 0`` and ``K.F = -2``.

        Args:
            lattice (PicLattice): lattice with n <= 8.
            slack (int, optional): widening of the degree bound.
                Defaults to 0.

        Returns:
            list[DivClass]: conic classes, sorted.

        """
        return self._classes(lattice, CONIC, slack)

    def is_minimal(
        self,
        involution: LatticeInvolution,
    ) -> MinimalityResult:
        """Test every exceptional class against its image.

        A pair is minimal when no exceptional class is fixed and each one
        meets its image.

        Args:
            involution (LatticeInvolution): action on a lattice with n <= 8.

        Returns:
            MinimalityResult: verdict with the first failing class.

        """
        lattice: PicLattice = involution.lattice

        for exceptional in self.exceptional_classes(lattice):
            image: DivClass = involution.apply(exceptional)
            intersection: int = lattice.dot(exceptional, image)

            if image == exceptional:
                return MinimalityResult(
                    minimal=False,
                    witness=exceptional,
                    image=image,
                    failure=MinimalityFailure.fixed,
                    intersection=intersection,
                )

            if intersection <= 0:
                return MinimalityResult(
                    minimal=False,
                    witness=exceptional,
                    image=image,
                    failure=MinimalityFailure.disjoint,
                    intersection=intersection,
                )

        return MinimalityResult(minimal=True)

    def stable_pencils(self, involution: LatticeInvolution) -> list[DivClass]:
        """Get the conic classes fixed by the action.

        Args:
            involution (LatticeInvolution): action.

        Returns:
            list[DivClass]: invariant conic classes.

        """
        return [
            conic
            for conic in self.conic_classes(involution.lattice)
            if involution.apply(conic) == conic
        ]

    def classify_pair(
        self,
        involution: LatticeInvolution,
    ) -> PairClassification:
        """Classify a surface with involution at lattice level.

        Args:
            involution (LatticeInvolution): validated action.

        Raises:
            LatticeOutOfScopeError: if a rank one pair fits no case.

        Returns:
            PairClassification: label with rank and witnesses.

        """
        involution.validate()
        lattice: PicLattice = involution.lattice
        minimality: MinimalityResult = self.is_minimal(involution)
        rank: int = self.fixed_rank(involution)

        if not minimality.minimal:
            label: PairLabel = PairLabel.non_minimal
        elif rank > 1:
            return PairClassification(
                label=PairLabel.fibration,
                fixed_rank=rank,
                minimality=minimality,
                stable_pencils=tuple(self.stable_pencils(involution)),
            )
        elif lattice.kind is LatticeKind.quadric:
            label = PairLabel.quadric
        elif lattice.points == 0:
            label = PairLabel.plane
        elif lattice.k_squared == DEL_PEZZO_DEGREE_2:
            label = PairLabel.del_pezzo_degree_2
        elif lattice.k_squared == DEL_PEZZO_DEGREE_1:
            label = PairLabel.del_pezzo_degree_1
        else:
            msg: str = (
                f"Minimal pair of invariant rank 1 with K^2 = "
                f"{lattice.k_squared} fits no case."
            )
            raise LatticeOutOfScopeError(msg)

        return PairClassification(
            label=label,
            fixed_rank=rank,
            minimality=minimality,
        )

    def _classes(
        self,
        lattice: PicLattice,
        profile: tuple[int, int],
        slack: int,
    ) -> list[DivClass]:
        if lattice.points > DEL_PEZZO_LIMIT:
            msg: str = (
                f"{lattice.points} points: K is not anti-ample and the "
                "class list is infinite."
            )
            raise LatticeOutOfScopeError(msg)

        square, canonical_degree = profile

        if lattice.kind is LatticeKind.quadric:
            found: list[DivClass] = self._quadric_classes(
                lattice,
                square,
                canonical_degree,
            )
        else:
            found = [
                DivClass((degree, *multiplicities))
                for degree in self._degree_range(
                    lattice.points,
                    square,
                    canonical_degree,
                    slack,
                )
                for multiplicities in self._search(
                    lattice.points,
                    -canonical_degree - 3 * degree,
                    degree * degree - square,
                )
            ]

        return sorted(
            found,
            key=lambda divisor: (
                divisor.coordinates[0],
                tuple(-value for value in divisor.coordinates[1:]),
            ),
        )

    def _degree_range(
        self,
        points: int,
        square: int,
        canonical_degree: int,
        slack: int,
    ) -> range:
        # With t = sum c = -(K.D) - 3a and q = sum c^2 = a^2 - D^2,
        # Cauchy-Schwarz t^2 <= n q cuts out an interval around the vertex.
        def feasible(degree: int) -> bool:
            total: int = -canonical_degree - 3 * degree
            squares: int = degree * degree - square

            return squares >= 0 and total * total <= points * squares

        start: int = (-3 * canonical_degree) // (9 - points)
        low: int = start
        high: int = start + 1

        while feasible(low - 1):
            low -= 1

        while feasible(high + 1):
            high += 1

        return range(low - slack, high + slack + 1)

    def _search(
        self,
        count: int,
        total: int,
        squares: int,
    ) -> Iterator[tuple[int, ...]]:
        if count == 0:
            if total == 0 and squares == 0:
                yield ()

            return

        if squares < 0 or (total - squares) % 2:
            return

        if total * total > count * squares:
            return

        bound: int = isqrt(squares)

        for value in range(bound, -bound - 1, -1):
            for rest in self._search(
                count - 1,
                total - value,
                squares - value * value,
            ):
                yield (value, *rest)

    def _quadric_classes(
        self,
        lattice: PicLattice,
        square: int,
        canonical_degree: int,
    ) -> list[DivClass]:
        box: range = range(-QUADRIC_SEARCH_BOX, QUADRIC_SEARCH_BOX + 1)

        return [
            candidate
            for first in box
            for second in box
            if lattice.square(candidate := DivClass((first, second))) == square
            and lattice.dot(lattice.canonical, candidate) == canonical_degree
        ]
