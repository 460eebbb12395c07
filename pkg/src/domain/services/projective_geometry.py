"""Projective geometry domain service."""

from collections.abc import Sequence
from itertools import combinations

from sympy import ImmutableMatrix, Rational, oo
from sympy.core.numbers import Infinity

from src.domain.exceptions.exact_arithmetic import DegenerateQuadraticError
from src.domain.exceptions.projective import CrossRatioError, ZeroPointError
from src.domain.interfaces.random_source import IRandomSource
from src.domain.value_objects.homogeneous_form import Scalar
from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.proj_point import ProjPoint

Parameter = Rational | Infinity

MINIMUM_DISTINCT: int = 3


class ProjectiveGeometryService:
    """Lines, frames and cross-ratios in the projective plane."""

    def harmonic_conjugate(
        self,
        quadratic: Sequence[Scalar],
        parameter: Parameter,
    ) -> Parameter:
        """Get the harmonic conjugate of a parameter.

        The reference pair is the root pair of ``a*t^2 + b*t + c``; the
        conjugate is ``-(b*t + 2c) / (2a*t + b)``.

        Args:
            quadratic (Sequence[Scalar]): coefficients a, b, c.
            parameter (Parameter): rational parameter or ``oo``.

        Raises:
            DegenerateQuadraticError: if ``a = 0`` or the roots coincide.

        Returns:
            Parameter: conjugate parameter, possibly ``oo``.

        """
        leading, middle, trailing = (Rational(value) for value in quadratic)

        if leading == 0 or middle**2 - 4 * leading * trailing == 0:
            msg: str = (
                f"Quadratic ({leading}, {middle}, {trailing}) has no two "
                "distinct finite roots."
            )
            raise DegenerateQuadraticError(msg)

        if parameter is oo:
            return -middle / (2 * leading)

        denominator: Rational = 2 * leading * parameter + middle

        if denominator == 0:
            return oo

        return -(middle * parameter + 2 * trailing) / denominator

    def cross_ratio(self, parameters: Sequence[Parameter]) -> Parameter:
        """Get the cross-ratio ``(t1, t2; t3, t4)``.

        Args:
            parameters (Sequence[Parameter]): four parameters, ``oo`` allowed.

        Raises:
            CrossRatioError: if fewer than three parameters are distinct.

        Returns:
            Parameter: ``(t3-t1)(t4-t2) / ((t3-t2)(t4-t1))``.

        """
        if len(set(parameters)) < MINIMUM_DISTINCT:
            msg: str = "Cross-ratio needs at least three distinct points."
            raise CrossRatioError(msg)

        first, second, third, fourth = (
            self._binary(parameter) for parameter in parameters
        )
        numerator: Rational = self._bracket(third, first) * self._bracket(
            fourth,
            second,
        )
        denominator: Rational = self._bracket(third, second) * self._bracket(
            fourth,
            first,
        )

        if denominator == 0:
            return oo

        return numerator / denominator

    def line_through(self, first: ProjPoint, second: ProjPoint) -> HPoly:
        """Get the line joining two points.

        Args:
            first (ProjPoint): first point.
            second (ProjPoint): second point.

        Raises:
            ZeroPointError: if the points coincide.

        Returns:
            HPoly: linear form of the line.

        """
        coefficients: list[int] = self._cross(
            first.coordinates,
            second.coordinates,
        )

        if not any(coefficients):
            msg: str = f"Points {first} and {second} coincide."
            raise ZeroPointError(msg)

        return HPoly.linear(coefficients).canonical()

    def meet(self, first: HPoly, second: HPoly) -> ProjPoint:
        """Get the intersection point of two lines.

        Args:
            first (HPoly): linear form.
            second (HPoly): linear form.

        Raises:
            ZeroPointError: if the lines coincide.

        Returns:
            ProjPoint: common point.

        """
        values: list[Rational] = self._cross(
            self._line_coefficients(first),
            self._line_coefficients(second),
        )

        if all(value == 0 for value in values):
            msg: str = f"Lines {first} and {second} coincide."
            raise ZeroPointError(msg)

        return ProjPoint.of(values)

    def is_collinear(self, points: Sequence[ProjPoint]) -> bool:
        """Check whether three points lie on a line.

        Args:
            points (Sequence[ProjPoint]): three points.

        Returns:
            bool: True if the determinant of their coordinates vanishes.

        """
        matrix: ImmutableMatrix = ImmutableMatrix(
            [point.coordinates for point in points],
        )
        return matrix.det() == 0

    def has_three_collinear(self, points: Sequence[ProjPoint]) -> bool:
        """Check every triple of a point set for collinearity.

        Args:
            points (Sequence[ProjPoint]): points.

        Returns:
            bool: True if some triple is collinear.

        """
        return any(
            self.is_collinear(triple) for triple in combinations(points, 3)
        )

    def frame_to_center(self, center: ProjPoint) -> ImmutableMatrix:
        """Get an integral frame sending (0:1:0) to a point.

        The second column is the point; the other two are standard basis
        vectors, the first pair in order that keeps the frame invertible.

        Args:
            center (ProjPoint): target of (0:1:0).

        Returns:
            ImmutableMatrix: invertible 3x3 matrix.

        """
        column: ImmutableMatrix = ImmutableMatrix(center.coordinates)

        for first, last in combinations(range(3), 2):
            frame: ImmutableMatrix = ImmutableMatrix.hstack(
                self._unit(first),
                column,
                self._unit(last),
            )

            if frame.det() != 0:
                return frame

        msg: str = f"No frame found for {center}."
        raise ZeroPointError(msg)

    def random_frame(
        self,
        random: IRandomSource,
        coordinate_range: int,
        center: ProjPoint | None = None,
    ) -> ImmutableMatrix:
        """Draw an invertible integral frame.

        Args:
            random (IRandomSource): random source.
            coordinate_range (int): entries are drawn from
                ``[-coordinate_range, coordinate_range]``.
            center (ProjPoint | None, optional): image of (0:1:0) to keep
                fixed in the second column. Defaults to None.

        Returns:
            ImmutableMatrix: invertible 3x3 matrix.

        """
        while True:
            entries: list[list[int]] = [
                [
                    random.integer(-coordinate_range, coordinate_range)
                    for _ in range(3)
                ]
                for _ in range(3)
            ]

            if center is not None:
                for row in range(3):
                    entries[row][1] = center.coordinates[row]

            frame: ImmutableMatrix = ImmutableMatrix(entries)

            if frame.det() != 0:
                return frame

    def transform_point(
        self,
        matrix: ImmutableMatrix,
        point: ProjPoint,
    ) -> ProjPoint:
        """Apply a linear map to a point.

        Args:
            matrix (ImmutableMatrix): invertible 3x3 matrix.
            point (ProjPoint): point.

        Returns:
            ProjPoint: ``M * point``.

        """
        image: ImmutableMatrix = matrix * ImmutableMatrix(point.coordinates)
        return ProjPoint.of(list(image))

    def _unit(self, index: int) -> ImmutableMatrix:
        return ImmutableMatrix([int(row == index) for row in range(3)])

    def _line_coefficients(self, line: HPoly) -> list[Rational]:
        terms = line.terms
        return [
            terms.get((1, 0, 0), Rational(0)),
            terms.get((0, 1, 0), Rational(0)),
            terms.get((0, 0, 1), Rational(0)),
        ]

    def _cross[Number: (int, Rational)](
        self,
        first: Sequence[Number],
        second: Sequence[Number],
    ) -> list[Number]:
        return [
            first[1] * second[2] - first[2] * second[1],
            first[2] * second[0] - first[0] * second[2],
            first[0] * second[1] - first[1] * second[0],
        ]

    def _binary(self, parameter: Parameter) -> tuple[Rational, Rational]:
        if parameter is oo:
            return (Rational(1), Rational(0))

        return (Rational(parameter), Rational(1))

    def _bracket(
        self,
        first: tuple[Rational, Rational],
        second: tuple[Rational, Rational],
    ) -> Rational:
        return first[0] * second[1] - first[1] * second[0]
