"""Homogeneous form value object shared by ternary and binary forms."""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from functools import reduce
from typing import ClassVar, Self

from sympy import QQ, Expr, Poly, Rational, Symbol, igcd, ilcm

from src.domain.exceptions.exact_arithmetic import (
    InhomogeneousPolynomialError,
    ZeroPolynomialError,
)

Monomial = tuple[int, ...]
Scalar = Rational | int


@dataclass(frozen=True, slots=True)
class HomogeneousForm:
    """Homogeneous polynomial with exact rational coefficients.

    The zero form keeps an explicit degree tag; every stored term has total
    degree equal to ``degree``. Subclasses fix the generators.
    """

    degree: int
    poly: Poly

    generators: ClassVar[tuple[Symbol, ...]] = ()

    @classmethod
    def zero(cls, degree: int) -> Self:
        """Make the zero form of a given degree.

        Args:
            degree (int): degree tag.

        Returns:
            Self: zero form.

        """
        return cls(degree=degree, poly=Poly(0, *cls.generators, domain=QQ))

    @classmethod
    def one(cls) -> Self:
        """Make the constant form 1.

        Returns:
            Self: degree zero form equal to one.

        """
        return cls(degree=0, poly=Poly(1, *cls.generators, domain=QQ))

    @classmethod
    def from_terms(
        cls,
        degree: int,
        terms: Mapping[Monomial, Scalar],
    ) -> Self:
        """Make new instance from a monomial to coefficient mapping.

        Args:
            degree (int): degree of the form.
            terms (Mapping[Monomial, Scalar]): exponent tuples and
                coefficients; zero coefficients are dropped.

        Raises:
            InhomogeneousPolynomialError: if an exponent tuple has the wrong
                total degree.

        Returns:
            Self: new form.

        """
        cleaned: dict[Monomial, Rational] = {
            tuple(monomial): Rational(coefficient)
            for monomial, coefficient in terms.items()
            if coefficient != 0
        }

        for monomial in cleaned:
            if sum(monomial) != degree:
                msg: str = f"Monomial {monomial} is not of degree {degree}."
                raise InhomogeneousPolynomialError(msg)

        if not cleaned:
            return cls.zero(degree)

        return cls(
            degree=degree,
            poly=Poly.from_dict(cleaned, *cls.generators, domain=QQ),
        )

    @classmethod
    def from_poly(cls, poly: Poly, degree: int | None = None) -> Self:
        """Make new instance from a sympy polynomial.

        Args:
            poly (Poly): polynomial in the class generators.
            degree (int | None, optional): expected degree; mandatory for
                the zero polynomial. Defaults to None.

        Raises:
            ZeroPolynomialError: zero polynomial without a degree tag.
            InhomogeneousPolynomialError: polynomial is not homogeneous of
                the expected degree.

        Returns:
            Self: new form.

        """
        if poly.gens != cls.generators or poly.get_domain() != QQ:
            poly = Poly(poly.as_expr(), *cls.generators, domain=QQ)

        if poly.is_zero:
            if degree is None:
                msg: str = "The zero form needs an explicit degree."
                raise ZeroPolynomialError(msg)

            return cls.zero(degree)

        total: int = int(poly.total_degree())

        if not poly.is_homogeneous or (degree is not None and degree != total):
            msg = f"Polynomial {poly.as_expr()} is not homogeneous."
            raise InhomogeneousPolynomialError(msg)

        return cls(degree=total, poly=poly)

    @classmethod
    def from_expr(
        cls,
        expression: Expr | int,
        degree: int | None = None,
    ) -> Self:
        """Make new instance from a sympy expression.

        Args:
            expression (Expr | int): expression in the class generators.
            degree (int | None, optional): expected degree. Defaults to None.

        Returns:
            Self: new form.

        """
        return cls.from_poly(
            Poly(expression, *cls.generators, domain=QQ),
            degree=degree,
        )

    @property
    def is_zero(self) -> bool:
        """Check if the form is identically zero.

        Returns:
            bool: True for the zero form.

        """
        return bool(self.poly.is_zero)

    @property
    def is_constant(self) -> bool:
        """Check if the form has degree zero and is nonzero.

        Returns:
            bool: True for nonzero constants.

        """
        return self.degree == 0 and not self.is_zero

    @property
    def terms(self) -> dict[Monomial, Rational]:
        """Get nonzero terms.

        Returns:
            dict[Monomial, Rational]: exponent tuples and coefficients.

        """
        if self.is_zero:
            return {}

        return {
            tuple(monomial): Rational(coefficient)
            for monomial, coefficient in self.poly.terms()
        }

    def sorted_terms(self) -> list[tuple[Monomial, Rational]]:
        """Get terms in the global order, leading term first.

        For homogeneous forms graded lexicographic order coincides with
        lexicographic order on exponent tuples.

        Returns:
            list[tuple[Monomial, Rational]]: ordered terms.

        """
        return sorted(self.terms.items(), reverse=True)

    def as_expr(self) -> Expr:
        """Get as sympy expression.

        Returns:
            Expr: expression.

        """
        return self.poly.as_expr()

    def evaluate(self, values: Sequence[Scalar]) -> Rational:
        """Evaluate exactly at a point.

        Args:
            values (Sequence[Scalar]): one value per generator.

        Returns:
            Rational: exact value.

        """
        total: Rational = Rational(0)
        rational_values: list[Rational] = [Rational(value) for value in values]

        for monomial, coefficient in self.terms.items():
            term: Rational = coefficient

            for value, exponent in zip(rational_values, monomial, strict=True):
                if exponent:
                    term *= value**exponent

            total += term

        return total

    def diff(self, index: int) -> Self:
        """Differentiate with respect to one generator.

        Args:
            index (int): generator index.

        Returns:
            Self: partial derivative, of degree one less.

        """
        return type(self).from_poly(
            self.poly.diff(self.generators[index]),
            degree=max(self.degree - 1, 0),
        )

    def gradient(self) -> tuple[Self, ...]:
        """Get all first partial derivatives.

        Returns:
            tuple[Self, ...]: partial derivatives in generator order.

        """
        return tuple(self.diff(index) for index in range(len(self.generators)))

    def multiplicity_at(self, values: Sequence[Scalar]) -> int:
        """Get the order of vanishing at a point.

        Args:
            values (Sequence[Scalar]): homogeneous coordinates.

        Raises:
            ZeroPolynomialError: the zero form vanishes to every order.

        Returns:
            int: smallest order of a partial derivative not vanishing there.

        """
        if self.is_zero:
            msg: str = "Multiplicity of the zero form is undefined."
            raise ZeroPolynomialError(msg)

        level: dict[Monomial, Self] = {(0,) * len(self.generators): self}

        for order in range(self.degree + 1):
            if any(form.evaluate(values) != 0 for form in level.values()):
                return order

            level = self._next_derivatives(level)

        return self.degree

    def canonical(self) -> Self:
        """Get the canonical representative up to a nonzero scalar.

        Coefficients are cleared to coprime integers and the leading term in
        the global monomial order is made positive.

        Returns:
            Self: canonical form.

        """
        if self.is_zero:
            return self

        ordered: list[tuple[Monomial, Rational]] = self.sorted_terms()
        denominator: int = reduce(
            ilcm,
            (int(coefficient.q) for _, coefficient in ordered),
            1,
        )
        content: int = reduce(
            igcd,
            (int(coefficient.p * denominator // coefficient.q)
             for _, coefficient in ordered),
            0,
        )
        scale: Rational = Rational(denominator, abs(content))

        if ordered[0][1] < 0:
            scale = -scale

        return self.scale(scale)

    def is_proportional(self, other: Self) -> bool:
        """Check projective equality.

        Args:
            other (Self): other form.

        Returns:
            bool: True if the forms differ by a nonzero scalar.

        """
        return self.canonical() == other.canonical()

    def scale(self, factor: Scalar) -> Self:
        """Multiply by a scalar.

        Args:
            factor (Scalar): scalar.

        Returns:
            Self: scaled form.

        """
        return type(self).from_poly(
            self.poly * Rational(factor),
            degree=self.degree,
        )

    def max_exponent(self, index: int) -> int:
        """Get the largest exponent of one generator.

        Args:
            index (int): generator index.

        Returns:
            int: largest exponent, zero for the zero form.

        """
        return max((monomial[index] for monomial in self.terms), default=0)

    def __add__(self, other: Self) -> Self:
        """Add two forms of the same degree."""
        self._check_degree(other)
        return type(self).from_poly(self.poly + other.poly, degree=self.degree)

    def __sub__(self, other: Self) -> Self:
        """Subtract two forms of the same degree."""
        self._check_degree(other)
        return type(self).from_poly(self.poly - other.poly, degree=self.degree)

    def __neg__(self) -> Self:
        """Negate."""
        return self.scale(-1)

    def __mul__(self, other: Self | Scalar) -> Self:
        """Multiply by a form or a scalar."""
        if isinstance(other, HomogeneousForm):
            return type(self).from_poly(
                self.poly * other.poly,
                degree=self.degree + other.degree,
            )

        return self.scale(other)

    def __rmul__(self, other: Scalar) -> Self:
        """Multiply by a scalar from the left."""
        return self.scale(other)

    def __pow__(self, exponent: int) -> Self:
        """Raise to a non-negative integer power."""
        return type(self).from_poly(
            self.poly**exponent,
            degree=self.degree * exponent,
        )

    def __str__(self) -> str:
        """Format in the command line grammar, e.g. ``x*z - y^2``."""
        if self.is_zero:
            return "0"

        pieces: list[str] = []

        for position, (monomial, coefficient) in enumerate(
            self.sorted_terms(),
        ):
            text: str = self._format_term(monomial, abs(coefficient))

            if position == 0:
                pieces.append(f"-{text}" if coefficient < 0 else text)
            else:
                sign: str = "-" if coefficient < 0 else "+"
                pieces.append(f" {sign} {text}")

        return "".join(pieces)

    def _format_term(self, monomial: Monomial, magnitude: Rational) -> str:
        factors: list[str] = []

        for generator, exponent in zip(self.generators, monomial, strict=True):
            if exponent == 1:
                factors.append(str(generator))
            elif exponent > 1:
                factors.append(f"{generator}^{exponent}")

        if not factors:
            return str(magnitude)

        if magnitude == 1:
            return "*".join(factors)

        return "*".join([str(magnitude), *factors])

    def _check_degree(self, other: Self) -> None:
        if self.degree != other.degree:
            msg: str = (
                f"Cannot combine forms of degrees {self.degree} "
                f"and {other.degree}."
            )
            raise InhomogeneousPolynomialError(msg)

    def _next_derivatives(
        self,
        level: dict[Monomial, Self],
    ) -> dict[Monomial, Self]:
        following: dict[Monomial, Self] = {}

        for orders, form in level.items():
            for index in range(len(self.generators)):
                bumped: Monomial = tuple(
                    order + (1 if position == index else 0)
                    for position, order in enumerate(orders)
                )

                if bumped not in following:
                    following[bumped] = form.diff(index)

        return following
