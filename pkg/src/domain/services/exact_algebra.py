"""Exact algebra domain service."""

import logging
from collections.abc import Sequence
from functools import reduce

from sympy import QQ, Poly, Rational, Symbol, gcd
from sympy.polys.matrices import DomainMatrix

from src.domain.exceptions.exact_arithmetic import (
    DegenerateQuadraticError,
    InexactDivisionError,
    ZeroPolynomialError,
)
from src.domain.value_objects.binary_form import BForm
from src.domain.value_objects.homogeneous_form import HomogeneousForm, Scalar
from src.domain.value_objects.hpoly import X, Y, Z, HPoly

logger: logging.Logger = logging.getLogger(__name__)

Row = Sequence[Scalar]


class ExactAlgebraService:
    """Gcd, resultants, kernels and binary form utilities over QQ."""

    def gcd[Form: HomogeneousForm](self, first: Form, second: Form) -> Form:
        """Get greatest common divisor in canonical form.

        Args:
            first (Form): first form.
            second (Form): second form.

        Raises:
            ZeroPolynomialError: if both forms are zero.

        Returns:
            Form: canonical gcd.

        """
        if first.is_zero and second.is_zero:
            msg: str = "The gcd of two zero forms is undefined."
            raise ZeroPolynomialError(msg)

        if first.is_zero:
            return second.canonical()

        if second.is_zero:
            return first.canonical()

        common: Poly = gcd(first.poly, second.poly)

        return type(first).from_poly(common).canonical()

    def gcd_all[Form: HomogeneousForm](self, forms: Sequence[Form]) -> Form:
        """Get gcd of several forms, ignoring zero ones.

        Args:
            forms (Sequence[Form]): forms, not all zero.

        Returns:
            Form: canonical gcd.

        """
        return reduce(self.gcd, forms)

    def exact_divide[Form: HomogeneousForm](
        self,
        dividend: Form,
        divisor: Form,
    ) -> Form:
        """Divide exactly.

        Args:
            dividend (Form): form to divide.
            divisor (Form): nonzero divisor.

        Raises:
            ZeroPolynomialError: if the divisor is zero.
            InexactDivisionError: if the remainder is nonzero.

        Returns:
            Form: quotient of degree ``dividend.degree - divisor.degree``.

        """
        if divisor.is_zero:
            msg: str = "Division by the zero form."
            raise ZeroPolynomialError(msg)

        quotient, remainder = dividend.poly.div(divisor.poly)

        if not remainder.is_zero:
            msg = f"{divisor} does not divide {dividend}."
            raise InexactDivisionError(msg)

        return type(dividend).from_poly(
            quotient,
            degree=dividend.degree - divisor.degree,
        )

    def resultant(self, first: Poly, second: Poly, variable: Symbol) -> Poly:
        """Get the Sylvester resultant with respect to one variable.

        Args:
            first (Poly): polynomial, coefficients in the other generators.
            second (Poly): polynomial of the same shape.
            variable (Symbol): eliminated variable.

        Raises:
            ZeroPolynomialError: if an input is zero.

        Returns:
            Poly: resultant in the remaining generators, or a constant.

        """
        if first.is_zero or second.is_zero:
            msg: str = "Resultant of a zero polynomial is undefined."
            raise ZeroPolynomialError(msg)

        others: tuple[Symbol, ...] = tuple(
            generator
            for generator in (*first.gens, *second.gens)
            if generator != variable
        )
        remaining: tuple[Symbol, ...] = tuple(dict.fromkeys(others))
        left: Poly = Poly(first.as_expr(), variable, *remaining, domain=QQ)
        right: Poly = Poly(second.as_expr(), variable, *remaining, domain=QQ)
        eliminated = left.resultant(right)

        if remaining:
            return Poly(eliminated.as_expr(), *remaining, domain=QQ)

        return Poly(eliminated.as_expr(), variable, domain=QQ)

    def eliminate_y(self, first: HPoly, second: HPoly) -> BForm:
        """Eliminate y from two ternary forms.

        Both forms must contain the pure power of y of their degree, so the
        resultant is a binary form in (x:z) of degree ``d1 * d2``; it is
        returned with x read as s and z as t.

        Args:
            first (HPoly): first form.
            second (HPoly): second form.

        Returns:
            BForm: eliminant, possibly zero.

        """
        target: int = first.degree * second.degree
        affine_first: Poly = Poly(first.as_expr().subs(Z, 1), Y, X, domain=QQ)
        affine_second: Poly = Poly(
            second.as_expr().subs(Z, 1),
            Y,
            X,
            domain=QQ,
        )
        eliminated: Poly = Poly(
            affine_first.resultant(affine_second).as_expr(),
            X,
            domain=QQ,
        )

        return BForm.from_terms(
            target,
            {
                (power, target - power): coefficient
                for (power,), coefficient in eliminated.terms()
                if coefficient != 0
            },
        )

    def kernel(
        self,
        rows: Sequence[Row],
        columns: int,
    ) -> list[list[Rational]]:
        """Get an exact basis of the kernel of a rational matrix.

        Args:
            rows (Sequence[Row]): matrix rows.
            columns (int): number of columns, needed for empty matrices.

        Returns:
            list[list[Rational]]: basis vectors, in reduced echelon order.

        """
        if not rows:
            return [
                [Rational(int(row == column)) for column in range(columns)]
                for row in range(columns)
            ]

        matrix: DomainMatrix = self._to_domain_matrix(rows, columns)
        basis: DomainMatrix = matrix.nullspace()

        return [
            [Rational(entry) for entry in vector]
            for vector in basis.to_Matrix().tolist()
        ]

    def rank(self, rows: Sequence[Row], columns: int) -> int:
        """Get the rank of a rational matrix.

        Args:
            rows (Sequence[Row]): matrix rows.
            columns (int): number of columns.

        Returns:
            int: rank.

        """
        if not rows:
            return 0

        return int(self._to_domain_matrix(rows, columns).rank())

    def bform_discriminant(
        self,
        quadratic: BForm,
        linear: BForm,
        constant: BForm,
    ) -> BForm:
        """Get the discriminant ``b^2 - 4ac`` of a binary quadratic.

        Args:
            quadratic (BForm): coefficient a.
            linear (BForm): coefficient b.
            constant (BForm): coefficient c.

        Raises:
            DegenerateQuadraticError: if a is identically zero.

        Returns:
            BForm: discriminant of degree ``2 * linear.degree``.

        """
        if quadratic.is_zero:
            msg: str = "The quadratic coefficient vanishes identically."
            raise DegenerateQuadraticError(msg)

        return linear * linear - (quadratic * constant).scale(4)

    def is_squarefree(self, form: BForm) -> bool:
        """Check that a binary form has no repeated linear factor.

        Args:
            form (BForm): nonzero form.

        Raises:
            ZeroPolynomialError: if the form is zero.

        Returns:
            bool: True if the form and both its partials are coprime.

        """
        if form.is_zero:
            msg: str = "Squarefreeness of the zero form is undefined."
            raise ZeroPolynomialError(msg)

        if form.degree <= 1:
            return True

        common: BForm = self.gcd_all([form, *form.gradient()])

        return common.degree == 0

    def linear_factors(self, form: BForm) -> list[tuple[BForm, int]]:
        """Get the rational linear factors of a binary form.

        Args:
            form (BForm): nonzero form.

        Raises:
            ZeroPolynomialError: if the form is zero.

        Returns:
            list[tuple[BForm, int]]: canonical linear factors with
                multiplicities, sorted.

        """
        if form.is_zero:
            msg: str = "Cannot factor the zero form."
            raise ZeroPolynomialError(msg)

        _, factors = form.poly.factor_list()
        linear: list[tuple[BForm, int]] = [
            (BForm.from_poly(factor).canonical(), int(multiplicity))
            for factor, multiplicity in factors
            if factor.total_degree() == 1
        ]

        return sorted(linear, key=lambda item: item[0].sorted_terms())

    def _to_domain_matrix(
        self,
        rows: Sequence[Row],
        columns: int,
    ) -> DomainMatrix:
        return DomainMatrix(
            [[QQ.convert(Rational(entry)) for entry in row] for row in rows],
            (len(rows), columns),
            QQ,
        )
