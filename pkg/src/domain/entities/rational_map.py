"""Rational map entity."""

from collections.abc import Sequence
from functools import reduce
from typing import Self

from sympy import ImmutableMatrix, Poly, Rational, gcd, igcd, ilcm

from src.domain.exceptions.exact_arithmetic import (
    InhomogeneousPolynomialError,
    ZeroPolynomialError,
)
from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.proj_point import ProjPoint


class RationalMap:
    """Plane rational map given by three coprime forms of equal degree.

    Construction removes the common factor of the components and fixes one
    scalar for the whole triple, so two maps are equal exactly when they
    agree as rational maps.
    """

    def __init__(self, components: Sequence[HPoly]) -> None:
        """Create new instance.

        Args:
            components (Sequence[HPoly]): three forms of a common degree.

        Raises:
            ZeroPolynomialError: if every component is zero.
            InhomogeneousPolynomialError: if degrees differ.

        """
        if all(component.is_zero for component in components):
            msg: str = "A rational map needs a nonzero component."
            raise ZeroPolynomialError(msg)

        if len({component.degree for component in components}) != 1:
            msg = "Map components must share one degree."
            raise InhomogeneousPolynomialError(msg)

        first, second, third = self._normalize(components)
        self.components: tuple[HPoly, HPoly, HPoly] = (first, second, third)

    @classmethod
    def identity(cls) -> Self:
        """Make the identity map (x:y:z).

        Returns:
            Self: identity.

        """
        return cls([HPoly.variable(index) for index in range(3)])

    @classmethod
    def linear(cls, matrix: ImmutableMatrix) -> Self:
        """Make the projective linear map ``X -> M * X``.

        Args:
            matrix (ImmutableMatrix): invertible 3x3 matrix.

        Returns:
            Self: linear map.

        """
        return cls(
            [
                HPoly.linear([matrix[row, column] for column in range(3)])
                for row in range(3)
            ],
        )

    @property
    def degree(self) -> int:
        """Get the degree after normalization.

        Returns:
            int: degree of the components.

        """
        return self.components[0].degree

    def evaluate(self, point: ProjPoint) -> ProjPoint | None:
        """Evaluate at a point.

        Args:
            point (ProjPoint): point of the plane.

        Returns:
            ProjPoint | None: image, or None where every component vanishes.

        """
        values: list[Rational] = [
            component.evaluate(point.rationals)
            for component in self.components
        ]

        if all(value == 0 for value in values):
            return None

        return ProjPoint.of(values)

    def to_strings(self) -> list[str]:
        """Get component strings in the command line grammar.

        Returns:
            list[str]: three polynomial strings.

        """
        return [str(component) for component in self.components]

    def __eq__(self, other: object) -> bool:
        """Check equality as rational maps."""
        if not isinstance(other, RationalMap):
            return NotImplemented

        return self.components == other.components

    def __hash__(self) -> int:
        """Hash normalized components."""
        return hash(self.components)

    def __str__(self) -> str:
        """Format as ``(f1 : f2 : f3)``."""
        return f"({' : '.join(self.to_strings())})"

    def __repr__(self) -> str:
        """Format for debugging."""
        return f"RationalMap{self}"

    def _normalize(self, components: Sequence[HPoly]) -> list[HPoly]:
        nonzero: list[Poly] = [
            component.poly for component in components if not component.is_zero
        ]
        common: Poly = reduce(gcd, nonzero)
        drop: int = int(common.total_degree())
        degree: int = components[0].degree - drop

        reduced: list[HPoly] = [
            HPoly.from_poly(component.poly.exquo(common), degree=degree)
            if drop
            else component
            for component in components
        ]

        return [component.scale(self._scale(reduced)) for component in reduced]

    def _scale(self, components: list[HPoly]) -> Rational:
        coefficients: list[Rational] = [
            coefficient
            for component in components
            for _, coefficient in component.sorted_terms()
        ]
        denominator: int = reduce(
            ilcm,
            (int(coefficient.q) for coefficient in coefficients),
            1,
        )
        content: int = reduce(
            igcd,
            (
                int(coefficient.p * denominator // coefficient.q)
                for coefficient in coefficients
            ),
            0,
        )
        scale: Rational = Rational(denominator, content)

        return -scale if coefficients[0] < 0 else scale
