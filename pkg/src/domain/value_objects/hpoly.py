"""Ternary form value object."""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import ClassVar, Self

from sympy import QQ, Matrix, Poly, Rational, Symbol, symbols

from src.domain.value_objects.homogeneous_form import (
    HomogeneousForm,
    Monomial,
    Scalar,
)

X, Y, Z = symbols("x y z")


@dataclass(frozen=True, slots=True)
class HPoly(HomogeneousForm):
    """Homogeneous polynomial in x, y, z with rational coefficients."""

    generators: ClassVar[tuple[Symbol, ...]] = (X, Y, Z)

    @classmethod
    def variable(cls, index: int) -> Self:
        """Make a coordinate form.

        Args:
            index (int): 0 for x, 1 for y, 2 for z.

        Returns:
            Self: linear form.

        """
        return cls.from_expr(cls.generators[index])

    @classmethod
    def linear(cls, coefficients: Sequence[Scalar]) -> Self:
        """Make a linear form a*x + b*y + c*z.

        Args:
            coefficients (Sequence[Scalar]): a, b, c.

        Returns:
            Self: linear form, possibly zero.

        """
        return cls.from_terms(
            1,
            {
                (1, 0, 0): coefficients[0],
                (0, 1, 0): coefficients[1],
                (0, 0, 1): coefficients[2],
            },
        )

    @classmethod
    def monomials(cls, degree: int) -> list[Monomial]:
        """List monomials of a degree in the global order.

        Args:
            degree (int): degree.

        Returns:
            list[Monomial]: exponent triples, largest first.

        """
        return [
            (first, degree - first - last, last)
            for first in range(degree, -1, -1)
            for last in range(degree - first + 1)
        ]

    def substitute(self, images: Sequence["HPoly"]) -> Self:
        """Substitute three forms of a common degree for x, y, z.

        Args:
            images (Sequence[HPoly]): forms replacing x, y and z.

        Returns:
            Self: composed form of degree ``degree * images degree``.

        """
        image_degree: int = images[0].degree
        powers: list[list[Poly]] = [
            [Poly(1, *self.generators, domain=QQ)] for _ in range(3)
        ]

        for index, image in enumerate(images):
            for _ in range(self.degree):
                powers[index].append(powers[index][-1] * image.poly)

        result: Poly = Poly(0, *self.generators, domain=QQ)

        for (first, second, third), coefficient in self.terms.items():
            result += (
                powers[0][first] * powers[1][second] * powers[2][third]
            ) * coefficient

        return type(self).from_poly(result, degree=self.degree * image_degree)

    def linear_substitute(self, matrix: Matrix) -> Self:
        """Pull back along a linear change of coordinates.

        The result is ``f(M * (x, y, z))``.

        Args:
            matrix (Matrix): 3x3 rational matrix M.

        Returns:
            Self: transformed form of the same degree.

        """
        return self.substitute(
            [
                HPoly.linear([matrix[row, column] for column in range(3)])
                for row in range(3)
            ],
        )

    def coefficient_in(self, index: int, exponent: int) -> Self:
        """Collect the coefficient of a power of one variable.

        Args:
            index (int): variable index.
            exponent (int): power of that variable.

        Returns:
            Self: form free of the variable, of degree ``degree - exponent``.

        """
        collected: dict[Monomial, Rational] = {}

        for monomial, coefficient in self.terms.items():
            if monomial[index] == exponent:
                reduced: list[int] = list(monomial)
                reduced[index] = 0
                collected[tuple(reduced)] = coefficient

        return type(self).from_terms(self.degree - exponent, collected)

    def restrict_to_fibre(self, first: Scalar, last: Scalar) -> Poly:
        """Restrict to the line through (0:1:0) with fixed (x:z).

        Args:
            first (Scalar): value of x.
            last (Scalar): value of z.

        Returns:
            Poly: univariate polynomial in y.

        """
        collected: dict[tuple[int], Rational] = {}

        for (power_x, power_y, power_z), coefficient in self.terms.items():
            value: Rational = (
                coefficient
                * Rational(first) ** power_x
                * Rational(last) ** power_z
            )
            collected[(power_y,)] = collected.get((power_y,), 0) + value

        return Poly.from_dict(collected or {(0,): 0}, Y, domain=QQ)
