"""Residual base point extraction domain service."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from sympy import ImmutableMatrix, Poly, Rational, gcd

from src.domain.exceptions.exact_arithmetic import InexactDivisionError
from src.domain.interfaces.random_source import IRandomSource
from src.domain.services.exact_algebra import ExactAlgebraService
from src.domain.services.projective_geometry import ProjectiveGeometryService
from src.domain.value_objects.binary_form import BForm
from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.proj_point import ProjPoint

logger: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Elimination:
    """Two curves eliminated in a random frame, known points removed."""

    frame: ImmutableMatrix
    residual: BForm
    total_degree: int


class ResidualPointService:
    """Elimination of y in random frames with known factor removal."""

    def __init__(
        self,
        algebra: ExactAlgebraService | None = None,
        geometry: ProjectiveGeometryService | None = None,
        coordinate_range: int = 3,
    ) -> None:
        """Create new instance.

        Args:
            algebra (ExactAlgebraService | None, optional): exact algebra.
                Defaults to None.
            geometry (ProjectiveGeometryService | None, optional): frames.
                Defaults to None.
            coordinate_range (int, optional): entry bound of random frames.
                Defaults to 3.

        """
        self._algebra: ExactAlgebraService = algebra or ExactAlgebraService()
        self._geometry: ProjectiveGeometryService = (
            geometry or ProjectiveGeometryService()
        )
        self._coordinate_range: int = coordinate_range

    def eliminate(
        self,
        curves: tuple[HPoly, HPoly],
        known: Sequence[tuple[ProjPoint, int]],
        random: IRandomSource,
    ) -> Elimination | None:
        """Eliminate y in a random frame and strip known intersections.

        Args:
            curves (tuple[HPoly, HPoly]): two curves.
            known (Sequence[tuple[ProjPoint, int]]): known common points
                with their intersection multiplicities.
            random (IRandomSource): source of the frame.

        Returns:
            Elimination | None: residual form, or None when the frame is
                unusable (colliding projections, missing pure powers of y,
                zero eliminant or a known factor of lower multiplicity).

        """
        frame: ImmutableMatrix = self._geometry.random_frame(
            random,
            self._coordinate_range,
        )
        inverse: ImmutableMatrix = ImmutableMatrix(frame.inv())
        factors: list[tuple[BForm, int]] = []

        for point, multiplicity in known:
            moved: ProjPoint = self._geometry.transform_point(inverse, point)
            first, _, last = moved.coordinates

            if first == 0 and last == 0:
                return None

            factors.append(
                (BForm.linear_through(first, last).canonical(), multiplicity),
            )

        if len({factor for factor, _ in factors}) != len(factors):
            logger.debug("Known points collide under projection")
            return None

        moved_curves: list[HPoly] = [
            curve.linear_substitute(frame) for curve in curves
        ]

        if any(
            curve.max_exponent(1) != curve.degree for curve in moved_curves
        ):
            return None

        eliminant: BForm = self._algebra.eliminate_y(*moved_curves)

        if eliminant.is_zero:
            return None

        residual: BForm = eliminant

        try:
            for factor, multiplicity in factors:
                residual = self._algebra.exact_divide(
                    residual,
                    factor**multiplicity,
                )
        except InexactDivisionError:
            logger.debug("Known intersection multiplicity not reached")
            return None

        return Elimination(
            frame=frame,
            residual=residual,
            total_degree=eliminant.degree,
        )

    def points_over(
        self,
        root: tuple[int, int],
        curves: Sequence[HPoly],
        frame: ImmutableMatrix,
    ) -> list[ProjPoint]:
        """Get rational common points of curves on one projection fibre.

        Args:
            root (tuple[int, int]): fibre parameter (x:z) in the frame.
            curves (Sequence[HPoly]): curves in user coordinates.
            frame (ImmutableMatrix): frame of the elimination.

        Returns:
            list[ProjPoint]: common points in user coordinates.

        """
        first, last = root
        restricted: list[Poly] = [
            curve.linear_substitute(frame).restrict_to_fibre(first, last)
            for curve in curves
        ]
        common: Poly = restricted[0]

        for poly in restricted[1:]:
            common = gcd(common, poly)

        if common.is_zero or common.degree() <= 0:
            return []

        _, factors = common.factor_list()
        points: list[ProjPoint] = []

        for factor, _ in factors:
            if factor.degree() != 1:
                continue

            slope, offset = factor.all_coeffs()
            value: Rational = -Rational(offset) / Rational(slope)
            points.append(
                self._geometry.transform_point(
                    frame,
                    ProjPoint.of((first, value, last)),
                ),
            )

        return points
