"""Geiser involution domain service."""

import logging
from collections.abc import Sequence
from functools import partial

from src.domain.aggregates.involution_record import InvolutionRecord
from src.domain.entities.rational_map import RationalMap
from src.domain.exceptions.base import DomainValidationError
from src.domain.exceptions.involutions import (
    DegenerateConfigurationError,
    ResidualExtractionError,
)
from src.domain.interfaces.random_source import IRandomSource
from src.domain.services.linear_systems import LinearSystemService
from src.domain.services.rational_maps import RationalMapService
from src.domain.services.residual_points import (
    Elimination,
    ResidualPointService,
)
from src.domain.value_objects.fixed_curve_invariant import FixedCurveInvariant
from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.involution_kind import (
    GEISER_DEGREE,
    InvolutionKind,
)
from src.domain.value_objects.point_config import PointConfig
from src.domain.value_objects.proj_point import ProjPoint
from src.domain.value_objects.residual_report import ResidualReport

logger: logging.Logger = logging.getLogger(__name__)

PENCIL_SIZE: int = 2


class GeiserService:
    """Ninth base point of the pencil of cubics through seven points."""

    def __init__(
        self,
        systems: LinearSystemService | None = None,
        residuals: ResidualPointService | None = None,
        maps: RationalMapService | None = None,
        retry_limit: int = 12,
    ) -> None:
        """Create new instance.

        Args:
            systems (LinearSystemService | None, optional): linear systems.
                Defaults to None.
            residuals (ResidualPointService | None, optional): elimination.
                Defaults to None.
            maps (RationalMapService | None, optional): interpolation.
                Defaults to None.
            retry_limit (int, optional): random frames tried per point.
                Defaults to 12.

        """
        self._systems: LinearSystemService = systems or LinearSystemService()
        self._residuals: ResidualPointService = (
            residuals or ResidualPointService()
        )
        self._maps: RationalMapService = maps or RationalMapService()
        self._retry_limit: int = retry_limit

    def configuration(self, points: Sequence[ProjPoint]) -> PointConfig:
        """Validate seven points.

        Args:
            points (Sequence[ProjPoint]): seven points.

        Returns:
            PointConfig: configuration with its net of cubics.

        """
        return self._systems.geiser_configuration(points)

    def cubic_system(self, points: Sequence[ProjPoint]) -> list[HPoly]:
        """Get the net of cubics through seven points.

        Args:
            points (Sequence[ProjPoint]): seven points.

        Returns:
            list[HPoly]: three basis cubics.

        """
        return self._systems.cubic_system(points)

    def evaluate_with_report(
        self,
        config: PointConfig,
        point: ProjPoint,
        random: IRandomSource,
    ) -> tuple[ProjPoint, ResidualReport]:
        """Get the ninth base point of the pencil through a point.

        The two pencil generators are eliminated in a random frame; the
        degree 9 eliminant loses the eight known linear factors and the
        last one gives the fibre of the image.

        Args:
            config (PointConfig): validated seven points.
            point (ProjPoint): point off the configuration.
            random (IRandomSource): source of frames.

        Raises:
            DegenerateConfigurationError: if the pencil through the point
                does not have dimension one.
            ResidualExtractionError: if every frame failed.

        Returns:
            tuple[ProjPoint, ResidualReport]: image and bookkeeping.

        """
        if point in config.points:
            msg: str = f"{point} is a base point of the Geiser involution."
            raise DegenerateConfigurationError(msg, reason="indeterminate")

        pencil: list[HPoly] = self._systems.through_point(config.system, point)

        if len(pencil) != PENCIL_SIZE:
            msg = f"Cubics through {point} form a system of {len(pencil)}."
            raise DegenerateConfigurationError(msg)

        known: list[tuple[ProjPoint, int]] = [
            (known_point, 1) for known_point in (*config.points, point)
        ]

        for attempt in range(1, self._retry_limit + 1):
            elimination: Elimination | None = self._residuals.eliminate(
                (pencil[0], pencil[1]),
                known,
                random,
            )

            if elimination is None or elimination.residual.degree != 1:
                continue

            images: list[ProjPoint] = self._residuals.points_over(
                elimination.residual.root_of_linear(),
                pencil,
                elimination.frame,
            )
            images = [image for image in images if image not in config.points]

            if len(images) != 1:
                logger.debug("Attempt %d: %d images", attempt, len(images))
                continue

            return (
                images[0],
                ResidualReport(
                    total_degree=elimination.total_degree,
                    known_degrees=tuple(1 for _ in known),
                    residual_degree=elimination.residual.degree,
                    attempts=attempt,
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
        """Apply the Geiser involution.

        Args:
            config (PointConfig): validated seven points.
            point (ProjPoint): point.
            random (IRandomSource): source of frames.

        Returns:
            ProjPoint | None: image, None at a configuration point.

        """
        if point in config.points:
            return None

        image, _ = self.evaluate_with_report(config, point, random)

        return image

    def fixed_sextic(self, config: PointConfig) -> HPoly:
        """Get the Jacobian curve of the net of cubics.

        Args:
            config (PointConfig): validated seven points.

        Raises:
            DegenerateConfigurationError: if the Jacobian vanishes.

        Returns:
            HPoly: canonical sextic, double at each point.

        """
        rows: list[tuple[HPoly, ...]] = [
            cubic.gradient() for cubic in config.system
        ]
        determinant: HPoly = (
            rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
            - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
            + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
        )

        if determinant.is_zero:
            msg: str = "Jacobian of the net of cubics vanishes."
            raise DegenerateConfigurationError(msg)

        return determinant.canonical()

    def record(
        self,
        config: PointConfig,
        random: IRandomSource,
        rational_map: RationalMap | None = None,
    ) -> InvolutionRecord:
        """Build the Geiser record.

        Args:
            config (PointConfig): validated seven points.
            random (IRandomSource): source of frames for evaluations.
            rational_map (RationalMap | None, optional): interpolated closed
                form. Defaults to None.

        Returns:
            InvolutionRecord: record with pointwise evaluator.

        """
        kind: InvolutionKind = InvolutionKind.geiser()

        return InvolutionRecord(
            kind=kind,
            evaluator=partial(self.evaluate, config, random=random),
            invariant=FixedCurveInvariant.expected_for(kind),
            seed=random.seed,
            rational_map=rational_map,
            fixed_curve=self.fixed_sextic(config),
            config=config,
        )

    def interpolated_map(
        self,
        config: PointConfig,
        random: IRandomSource,
        samples: int = 100,
        coordinate_range: int = 9,
    ) -> RationalMap:
        """Reconstruct the degree 8 closed form from exact samples.

        Args:
            config (PointConfig): validated seven points.
            random (IRandomSource): source of sample points and frames.
            samples (int, optional): number of sample pairs. Defaults to 100.
            coordinate_range (int, optional): sample coordinate bound.
                Defaults to 9.

        Returns:
            RationalMap: interpolated map of degree 8.

        """
        pairs: list[tuple[ProjPoint, ProjPoint]] = []

        while len(pairs) < samples:
            values: list[int] = [
                random.integer(-coordinate_range, coordinate_range)
                for _ in range(3)
            ]

            if not any(values):
                continue

            point: ProjPoint = ProjPoint.of(values)

            if point in config.points:
                continue

            try:
                image, _ = self.evaluate_with_report(config, point, random)
            except DomainValidationError as error:
                logger.debug("Skipped sample %s: %s", point, error)
                continue

            pairs.append((point, image))

        return self._maps.interpolate(pairs, GEISER_DEGREE)
