"""Linear systems of plane curves domain service."""

import logging
from collections.abc import Callable, Sequence

from sympy import Rational

from src.domain.exceptions.involutions import DegenerateConfigurationError
from src.domain.services.exact_algebra import ExactAlgebraService
from src.domain.services.projective_geometry import ProjectiveGeometryService
from src.domain.value_objects.homogeneous_form import Monomial
from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.point_config import (
    ConfigurationReport,
    PointConfig,
)
from src.domain.value_objects.proj_point import ProjPoint

logger: logging.Logger = logging.getLogger(__name__)

GEISER_POINTS: int = 7
BERTINI_POINTS: int = 8
CUBIC_NET_DIMENSION: int = 3
SEXTIC_WEB_DIMENSION: int = 4


class LinearSystemService:
    """Linear systems of curves with assigned base points."""

    def __init__(
        self,
        algebra: ExactAlgebraService | None = None,
        geometry: ProjectiveGeometryService | None = None,
    ) -> None:
        """Create new instance.

        Args:
            algebra (ExactAlgebraService | None, optional): linear algebra
                backend. Defaults to None.
            geometry (ProjectiveGeometryService | None, optional): point
                predicates. Defaults to None.

        """
        self._algebra: ExactAlgebraService = algebra or ExactAlgebraService()
        self._geometry: ProjectiveGeometryService = (
            geometry or ProjectiveGeometryService()
        )

    def cubic_system(self, points: Sequence[ProjPoint]) -> list[HPoly]:
        """Get the net of cubics through seven points.

        Args:
            points (Sequence[ProjPoint]): seven points.

        Raises:
            DegenerateConfigurationError: if the conditions have rank < 7.

        Returns:
            list[HPoly]: three canonical basis cubics.

        """
        self._check_distinct(points)
        rows: list[list[Rational]] = self.vanishing_rows(points, 3)
        rank: int = self._algebra.rank(rows, len(HPoly.monomials(3)))

        if rank < len(points):
            msg: str = (
                f"Cubic conditions at {len(points)} points have rank {rank}."
            )
            raise DegenerateConfigurationError(msg)

        return self.forms_from_rows(rows, 3)

    def sextic_system(self, points: Sequence[ProjPoint]) -> list[HPoly]:
        """Get the sextics singular at eight points.

        Only the three partial derivatives are imposed per point; vanishing
        of the value follows from the Euler relation.

        Args:
            points (Sequence[ProjPoint]): eight points.

        Raises:
            DegenerateConfigurationError: if the conditions have rank < 24.

        Returns:
            list[HPoly]: canonical basis sextics.

        """
        self._check_distinct(points)
        rows: list[list[Rational]] = self.singular_rows(points, 6)
        rank: int = self._algebra.rank(rows, len(HPoly.monomials(6)))

        if rank < 3 * len(points):
            msg: str = (
                f"Singularity conditions at {len(points)} points have "
                f"rank {rank}."
            )
            raise DegenerateConfigurationError(msg)

        return self.forms_from_rows(rows, 6)

    def geiser_configuration(
        self,
        points: Sequence[ProjPoint],
    ) -> PointConfig:
        """Validate seven points for the Geiser construction.

        Args:
            points (Sequence[ProjPoint]): seven points.

        Raises:
            DegenerateConfigurationError: if a general position check fails.

        Returns:
            PointConfig: configuration carrying its net of cubics.

        """
        return self._configuration(
            points,
            GEISER_POINTS,
            CUBIC_NET_DIMENSION,
            self.cubic_system,
        )

    def bertini_configuration(
        self,
        points: Sequence[ProjPoint],
    ) -> PointConfig:
        """Validate eight points for the Bertini construction.

        Args:
            points (Sequence[ProjPoint]): eight points.

        Raises:
            DegenerateConfigurationError: if a general position check fails.

        Returns:
            PointConfig: configuration carrying its singular sextics.

        """
        return self._configuration(
            points,
            BERTINI_POINTS,
            SEXTIC_WEB_DIMENSION,
            self.sextic_system,
        )

    def through_point(
        self,
        system: Sequence[HPoly],
        point: ProjPoint,
    ) -> list[HPoly]:
        """Get the members of a linear system passing through a point.

        Args:
            system (Sequence[HPoly]): basis of the system.
            point (ProjPoint): extra base point.

        Returns:
            list[HPoly]: basis of the subsystem; its size drops by one
                unless the point is a base point of the whole system.

        """
        values: list[Rational] = [
            form.evaluate(point.rationals) for form in system
        ]
        combinations: list[list[Rational]] = self._algebra.kernel(
            [values],
            len(system),
        )

        return [self.combine(system, weights) for weights in combinations]

    def combine(
        self,
        system: Sequence[HPoly],
        weights: Sequence[Rational | int],
    ) -> HPoly:
        """Get a linear combination of forms.

        Args:
            system (Sequence[HPoly]): forms of one degree.
            weights (Sequence[Rational | int]): coefficients.

        Returns:
            HPoly: canonical combination.

        """
        total: HPoly = HPoly.zero(system[0].degree)

        for form, weight in zip(system, weights, strict=True):
            if weight != 0:
                total += form.scale(weight)

        return total.canonical()

    def vanishing_rows(
        self,
        points: Sequence[ProjPoint],
        degree: int,
    ) -> list[list[Rational]]:
        """Get the conditions for passing through points.

        Args:
            points (Sequence[ProjPoint]): points.
            degree (int): curve degree.

        Returns:
            list[list[Rational]]: one row of monomial values per point.

        """
        monomials: list[Monomial] = HPoly.monomials(degree)

        return [
            [self._monomial_value(monomial, point) for monomial in monomials]
            for point in points
        ]

    def singular_rows(
        self,
        points: Sequence[ProjPoint],
        degree: int,
    ) -> list[list[Rational]]:
        """Get the conditions for being singular at points.

        Args:
            points (Sequence[ProjPoint]): points.
            degree (int): curve degree.

        Returns:
            list[list[Rational]]: three rows per point, one per partial.

        """
        monomials: list[Monomial] = HPoly.monomials(degree)
        rows: list[list[Rational]] = []

        for point in points:
            for index in range(3):
                row: list[Rational] = []

                for monomial in monomials:
                    exponent: int = monomial[index]

                    if exponent == 0:
                        row.append(Rational(0))
                        continue

                    lowered: list[int] = list(monomial)
                    lowered[index] -= 1
                    row.append(
                        exponent
                        * self._monomial_value(tuple(lowered), point),
                    )

                rows.append(row)

        return rows

    def forms_from_rows(
        self,
        rows: Sequence[Sequence[Rational]],
        degree: int,
    ) -> list[HPoly]:
        """Get the forms whose coefficient vectors solve linear conditions.

        Args:
            rows (Sequence[Sequence[Rational]]): conditions on coefficients
                in the global monomial order.
            degree (int): degree of the forms.

        Returns:
            list[HPoly]: canonical basis forms.

        """
        monomials: list[Monomial] = HPoly.monomials(degree)

        return [
            HPoly.from_terms(
                degree,
                dict(zip(monomials, vector, strict=True)),
            ).canonical()
            for vector in self._algebra.kernel(rows, len(monomials))
        ]

    def _configuration(
        self,
        points: Sequence[ProjPoint],
        size: int,
        dimension: int,
        build: Callable[[Sequence[ProjPoint]], list[HPoly]],
    ) -> PointConfig:
        if len(points) != size:
            msg: str = f"Expected {size} points, got {len(points)}."
            raise DegenerateConfigurationError(msg)

        distinct: bool = len(set(points)) == len(points)
        collinear: bool = self._geometry.has_three_collinear(points)
        system: list[HPoly] = build(points) if distinct else []
        report: ConfigurationReport = ConfigurationReport(
            pairwise_distinct=distinct,
            no_three_collinear=not collinear,
            system_dimension=len(system),
            expected_dimension=dimension,
        )

        if not report.is_valid:
            msg = f"Points are not in general position: {report}."
            raise DegenerateConfigurationError(msg)

        logger.debug("Validated %d points, system of %d", size, len(system))

        return PointConfig(
            points=tuple(points),
            report=report,
            system=tuple(system),
        )

    def _check_distinct(self, points: Sequence[ProjPoint]) -> None:
        if len(set(points)) != len(points):
            msg: str = "Configuration points must be pairwise distinct."
            raise DegenerateConfigurationError(msg)

    def _monomial_value(
        self,
        monomial: Sequence[int],
        point: ProjPoint,
    ) -> Rational:
        value: Rational = Rational(1)

        for coordinate, exponent in zip(
            point.coordinates,
            monomial,
            strict=True,
        ):
            value *= Rational(coordinate) ** exponent

        return value
