"""Bertini involution domain service."""

import logging
from collections.abc import Sequence
from functools import partial

from src.domain.aggregates.involution_record import InvolutionRecord
from src.domain.exceptions.involutions import (
    DegenerateConfigurationError,
    ResidualExtractionError,
)
from src.domain.interfaces.random_source import IRandomSource
from src.domain.services.exact_algebra import ExactAlgebraService
from src.domain.services.linear_systems import LinearSystemService
from src.domain.services.residual_points import (
    Elimination,
    ResidualPointService,
)
from src.domain.value_objects.fixed_curve_invariant import FixedCurveInvariant
from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.involution_kind import InvolutionKind
from src.domain.value_objects.point_config import PointConfig
from src.domain.value_objects.proj_point import ProjPoint
from src.domain.value_objects.residual_report import ResidualReport

logger: logging.Logger = logging.getLogger(__name__)

NET_SIZE: int = 3
DOUBLE_POINT_CONTACT: int = 4
RESIDUAL_DEGREE: int = 3


class BertiniService:
    """Residual base point of the net of sextics singular at eight points.

    Two members of the net meet with multiplicity 4 at each of the eight
    double points and once at the extra point, leaving a cubic residual
    whose rational roots are filtered by the whole net.
    """

    def __init__(
        self,
        systems: LinearSystemService | None = None,
        residuals: ResidualPointService | None = None,
        algebra: ExactAlgebraService | None = None,
        retry_limit: int = 12,
        weight_range: int = 3,
    ) -> None:
        """Create new instance.

        Args:
            systems (LinearSystemService | None, optional): linear systems.
                Defaults to None.
            residuals (ResidualPointService | None, optional): elimination.
                Defaults to None.
            algebra (ExactAlgebraService | None, optional): factorization
                of the residual. Defaults to None.
            retry_limit (int, optional): attempts per point. Defaults to 12.
            weight_range (int, optional): bound of the random weights
                combining net generators. Defaults to 3.

        """
        self._systems: LinearSystemService = systems or LinearSystemService()
        self._residuals: ResidualPointService = (
            residuals or ResidualPointService()
        )
        self._algebra: ExactAlgebraService = algebra or ExactAlgebraService()
        self._retry_limit: int = retry_limit
        self._weight_range: int = weight_range

    def configuration(self, points: Sequence[ProjPoint]) -> PointConfig:
        """Validate eight points.

        Args:
            points (Sequence[ProjPoint]): eight points.

        Returns:
            PointConfig: configuration with its four singular sextics.

        """
        return self._systems.bertini_configuration(points)

    def sextic_system(self, points: Sequence[ProjPoint]) -> list[HPoly]:
        """Get the sextics singular at eight points.

        Args:
            points (Sequence[ProjPoint]): eight points.

        Returns:
            list[HPoly]: four basis sextics.

        """
        return self._systems.sextic_system(points)

    def evaluate_with_report(
        self,
        config: PointConfig,
        point: ProjPoint,
        random: IRandomSource,
    ) -> tuple[ProjPoint, ResidualReport]:
        """Get the residual base point of the net through a point.

        Args:
            config (PointConfig): validated eight points.
            point (ProjPoint): point off the configuration.
            random (IRandomSource): source of frames and weights.

        Raises:
            DegenerateConfigurationError: if the net through the point does
                not have dimension two.
            ResidualExtractionError: if no attempt isolated one candidate.

        Returns:
            tuple[ProjPoint, ResidualReport]: image and bookkeeping.

        """
        if point in config.points:
            msg: str = f"{point} is a base point of the Bertini involution."
            raise DegenerateConfigurationError(msg, reason="indeterminate")

        net: list[HPoly] = self._systems.through_point(config.system, point)

        if len(net) != NET_SIZE:
            msg = f"Sextics through {point} form a system of {len(net)}."
            raise DegenerateConfigurationError(msg)

        known: list[tuple[ProjPoint, int]] = [
            *(
                (known_point, DOUBLE_POINT_CONTACT)
                for known_point in config.points
            ),
            (point, 1),
        ]
        excluded: set[ProjPoint] = set(config.points)

        for attempt in range(1, self._retry_limit + 1):
            pair: tuple[HPoly, HPoly] = (
                self._random_member(net, random),
                self._random_member(net, random),
            )

            if pair[0].is_zero or pair[0].is_proportional(pair[1]):
                continue

            elimination: Elimination | None = self._residuals.eliminate(
                pair,
                known,
                random,
            )

            if (
                elimination is None
                or elimination.residual.degree != RESIDUAL_DEGREE
            ):
                continue

            candidates: list[ProjPoint] = self._candidates(
                elimination,
                net,
                excluded,
            )

            if len(candidates) != 1:
                logger.debug(
                    "Attempt %d: %d candidates",
                    attempt,
                    len(candidates),
                )
                continue

            return (
                candidates[0],
                ResidualReport(
                    total_degree=elimination.total_degree,
                    known_degrees=tuple(
                        multiplicity for _, multiplicity in known
                    ),
                    residual_degree=elimination.residual.degree,
                    attempts=attempt,
                    candidates=len(candidates),
                ),
            )

        msg = f"No residual point isolated for {point}."
        raise ResidualExtractionError(msg)

    def evaluate(
        self,
        config: PointConfig,
        point: ProjPoint,
        random: IRandomSource,
    ) -> ProjPoint | None:
        """Apply the Bertini involution.

        Args:
            config (PointConfig): validated eight points.
            point (ProjPoint): point.
            random (IRandomSource): source of frames and weights.

        Returns:
            ProjPoint | None: image, None at a configuration point.

        """
        if point in config.points:
            return None

        image, _ = self.evaluate_with_report(config, point, random)

        return image

    def record(
        self,
        config: PointConfig,
        random: IRandomSource,
    ) -> InvolutionRecord:
        """Build the Bertini record.

        There is no closed form and no plane model of the fixed curve.

        Args:
            config (PointConfig): validated eight points.
            random (IRandomSource): source for evaluations.

        Returns:
            InvolutionRecord: record with pointwise evaluator.

        """
        kind: InvolutionKind = InvolutionKind.bertini()

        return InvolutionRecord(
            kind=kind,
            evaluator=partial(self.evaluate, config, random=random),
            invariant=FixedCurveInvariant.expected_for(kind),
            seed=random.seed,
            config=config,
        )

    def _candidates(
        self,
        elimination: Elimination,
        net: list[HPoly],
        excluded: set[ProjPoint],
    ) -> list[ProjPoint]:
        candidates: set[ProjPoint] = set()

        for factor, _ in self._algebra.linear_factors(elimination.residual):
            roots: list[ProjPoint] = self._residuals.points_over(
                factor.root_of_linear(),
                net,
                elimination.frame,
            )
            candidates.update(root for root in roots if root not in excluded)

        return sorted(candidates, key=lambda candidate: candidate.coordinates)

    def _random_member(
        self,
        net: list[HPoly],
        random: IRandomSource,
    ) -> HPoly:
        weights: list[int] = [
            random.integer(-self._weight_range, self._weight_range)
            for _ in net
        ]
        return self._systems.combine(net, weights)
