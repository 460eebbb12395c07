"""Rational map domain service."""

import logging
from collections.abc import Sequence

from sympy import Rational

from src.domain.entities.rational_map import RationalMap
from src.domain.exceptions.exact_arithmetic import ZeroPolynomialError
from src.domain.exceptions.projective import (
    CompositionError,
    IndeterminatePointError,
    InterpolationError,
    NotInverseError,
)
from src.domain.services.exact_algebra import ExactAlgebraService
from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.proj_point import ProjPoint

logger: logging.Logger = logging.getLogger(__name__)

PAIRS: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (1, 2))


class RationalMapService:
    """Composition, identity tests and interpolation of plane maps."""

    def __init__(self, algebra: ExactAlgebraService | None = None) -> None:
        """Create new instance.

        Args:
            algebra (ExactAlgebraService | None, optional): linear algebra
                backend. Defaults to None.

        """
        self._algebra: ExactAlgebraService = algebra or ExactAlgebraService()

    def compose(self, outer: RationalMap, inner: RationalMap) -> RationalMap:
        """Get ``outer o inner``.

        Args:
            outer (RationalMap): map applied second.
            inner (RationalMap): map applied first.

        Raises:
            CompositionError: if the composite vanishes identically.

        Returns:
            RationalMap: normalized composite.

        """
        try:
            return RationalMap(self._substitute(outer, inner))
        except ZeroPolynomialError as error:
            msg: str = f"Composition of {outer} and {inner} vanishes."
            raise CompositionError(msg) from error

    def is_identity(self, rational_map: RationalMap) -> bool:
        """Check whether a map is the identity.

        Args:
            rational_map (RationalMap): map.

        Returns:
            bool: True if all fixed-point minors vanish identically.

        """
        return self._minors_vanish(rational_map.components)

    def is_involution(self, rational_map: RationalMap) -> bool:
        """Check ``sigma o sigma = id`` symbolically.

        The composite is tested through its minors without removing the
        common factor, which is costly at degree ``d^2``.

        Args:
            rational_map (RationalMap): map.

        Returns:
            bool: True if the map is an involution or the identity.

        """
        return self._minors_vanish(
            self._substitute(rational_map, rational_map),
        )

    def is_involution_pointwise(
        self,
        rational_map: RationalMap,
        samples: Sequence[ProjPoint],
    ) -> bool:
        """Check ``sigma o sigma = id`` on sample points.

        Samples hitting a base point of the map or of its image are skipped.

        Args:
            rational_map (RationalMap): map.
            samples (Sequence[ProjPoint]): sample points.

        Returns:
            bool: True if every defined round trip returns its start.

        """
        for point in samples:
            image: ProjPoint | None = rational_map.evaluate(point)

            if image is None:
                continue

            back: ProjPoint | None = rational_map.evaluate(image)

            if back is not None and back != point:
                logger.debug("Round trip %s -> %s -> %s", point, image, back)
                return False

        return True

    def eval_map(
        self,
        rational_map: RationalMap,
        point: ProjPoint,
        *,
        strict: bool = False,
    ) -> ProjPoint | None:
        """Evaluate a map at a point.

        Args:
            rational_map (RationalMap): map.
            point (ProjPoint): point.
            strict (bool, optional): raise at base points instead of
                returning None. Defaults to False.

        Raises:
            IndeterminatePointError: at a base point in strict mode.

        Returns:
            ProjPoint | None: image, None at a base point.

        """
        image: ProjPoint | None = rational_map.evaluate(point)

        if image is None and strict:
            msg: str = f"{rational_map} is not defined at {point}."
            raise IndeterminatePointError(msg)

        return image

    def conjugate(
        self,
        sigma: RationalMap,
        phi: RationalMap,
        phi_inverse: RationalMap,
    ) -> RationalMap:
        """Get ``phi o sigma o phi^-1``.

        Args:
            sigma (RationalMap): map to conjugate.
            phi (RationalMap): birational map.
            phi_inverse (RationalMap): its inverse.

        Raises:
            NotInverseError: if the inverse is not two-sided.

        Returns:
            RationalMap: conjugate.

        """
        if not (
            self.is_identity(self.compose(phi, phi_inverse))
            and self.is_identity(self.compose(phi_inverse, phi))
        ):
            msg: str = f"{phi_inverse} is not an inverse of {phi}."
            raise NotInverseError(msg)

        return self.compose(phi, self.compose(sigma, phi_inverse))

    def interpolate(
        self,
        samples: Sequence[tuple[ProjPoint, ProjPoint]],
        degree: int,
    ) -> RationalMap:
        """Recover a map of a given degree from exact point pairs.

        Every pair ``(p, q)`` contributes ``q_j f_i(p) - q_i f_j(p) = 0``.

        Args:
            samples (Sequence[tuple[ProjPoint, ProjPoint]]): points and
                their images.
            degree (int): degree of the map.

        Raises:
            InterpolationError: if the solution is not unique.

        Returns:
            RationalMap: interpolated map.

        """
        monomials = HPoly.monomials(degree)
        size: int = len(monomials)
        rows: list[list[Rational]] = []

        for point, image in samples:
            values: list[Rational] = [
                HPoly.from_terms(degree, {monomial: 1}).evaluate(
                    point.rationals,
                )
                for monomial in monomials
            ]

            for first, second in PAIRS:
                row: list[Rational] = [Rational(0)] * (3 * size)

                left: Rational = image.rationals[second]
                right: Rational = image.rationals[first]

                for position, value in enumerate(values):
                    row[first * size + position] = left * value
                    row[second * size + position] = -right * value

                rows.append(row)

        basis: list[list[Rational]] = self._algebra.kernel(rows, 3 * size)

        if len(basis) != 1:
            msg: str = (
                f"{len(samples)} samples leave a {len(basis)}-dimensional "
                f"space of degree {degree} maps."
            )
            raise InterpolationError(msg)

        solution: list[Rational] = basis[0]
        logger.debug(
            "Interpolated degree %d map from %d samples",
            degree,
            len(samples),
        )

        return RationalMap(
            [
                HPoly.from_terms(
                    degree,
                    dict(
                        zip(
                            monomials,
                            solution[index * size : (index + 1) * size],
                            strict=True,
                        ),
                    ),
                )
                for index in range(3)
            ],
        )

    def _substitute(
        self,
        outer: RationalMap,
        inner: RationalMap,
    ) -> list[HPoly]:
        return [
            component.substitute(inner.components)
            for component in outer.components
        ]

    def _minors_vanish(self, components: Sequence[HPoly]) -> bool:
        variables: list[HPoly] = [HPoly.variable(index) for index in range(3)]

        return all(
            (
                variables[first] * components[second]
                - variables[second] * components[first]
            ).is_zero
            for first, second in PAIRS
        )
