"""Involution application service."""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from src.application.services.phase_timer import PhaseTimer
from src.domain.aggregates.involution_record import InvolutionRecord
from src.domain.entities.rational_map import RationalMap
from src.domain.exceptions.base import DomainValidationError
from src.domain.exceptions.fixed_curve import NotInvolutiveError
from src.domain.interfaces.random_source import (
    IRandomSource,
    IRandomSourceFactory,
)
from src.domain.services.bertini import BertiniService
from src.domain.services.classification import ClassificationService
from src.domain.services.de_jonquieres import DeJonquieresService
from src.domain.services.fixed_curve import FixedCurveService
from src.domain.services.geiser import GeiserService
from src.domain.value_objects.classification_result import (
    ClassificationResult,
)
from src.domain.value_objects.fixed_curve_invariant import FixedCurveInvariant
from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.involution_kind import InvolutionKind
from src.domain.value_objects.point_config import PointConfig
from src.domain.value_objects.proj_point import ProjPoint
from src.domain.value_objects.residual_report import ResidualReport

logger: logging.Logger = logging.getLogger(__name__)

SAMPLE_DRAW_FACTOR: int = 4


@dataclass(frozen=True, slots=True)
class SampleEvaluation:
    """One evaluated sample point with its round trip."""

    point: ProjPoint
    image: ProjPoint
    round_trip: ProjPoint
    report: ResidualReport

    @property
    def returned(self) -> bool:
        """Check that the second application gives the point back.

        Returns:
            bool: True on an exact round trip.

        """
        return self.round_trip == self.point


@dataclass(frozen=True, slots=True)
class FixedCurveSummary:
    """Fixed locus of a map given by its components."""

    curve: HPoly
    genus_bound: int


@dataclass(frozen=True, slots=True)
class InvolutionLimits:
    """Retry and sampling limits of the involution use cases."""

    retry_limit: int
    frame_range: int
    sample_range: int
    interpolation_samples: int
    symbolic_degree_limit: int
    pointwise_samples: int


type Evaluate = Callable[
    [PointConfig, ProjPoint, IRandomSource],
    tuple[ProjPoint, ResidualReport],
]


class InvolutionAppService:
    """Build, verify and classify plane involutions."""

    def __init__(
        self,
        random_sources: IRandomSourceFactory,
        limits: InvolutionLimits,
        timer: PhaseTimer | None = None,
    ) -> None:
        """Create new instance.

        Args:
            random_sources (IRandomSourceFactory): opens the seeded streams.
            limits (InvolutionLimits): retry and sampling limits.
            timer (PhaseTimer | None, optional): phase timer.
                Defaults to None.

        """
        self._random_sources: IRandomSourceFactory = random_sources
        self._limits: InvolutionLimits = limits
        self._de_jonquieres: DeJonquieresService = DeJonquieresService(
            retry_limit=limits.retry_limit,
            coordinate_range=limits.frame_range,
        )
        self._geiser: GeiserService = GeiserService(
            retry_limit=limits.retry_limit,
        )
        self._bertini: BertiniService = BertiniService(
            retry_limit=limits.retry_limit,
        )
        self._fixed_curves: FixedCurveService = FixedCurveService()
        self._classification: ClassificationService = ClassificationService(
            symbolic_degree_limit=limits.symbolic_degree_limit,
            sample_count=limits.pointwise_samples,
            coordinate_range=limits.sample_range,
        )
        self.timer: PhaseTimer = timer or PhaseTimer()

    def de_jonquieres(
        self,
        curve: HPoly,
        center: ProjPoint,
        seed: int,
        *,
        trusted: bool = False,
    ) -> InvolutionRecord:
        """Build and verify a De Jonquieres involution.

        Args:
            curve (HPoly): curve with an ordinary (d-2)-fold point at p.
            center (ProjPoint): center p.
            seed (int): random seed.
            trusted (bool, optional): skip the singularity test.
                Defaults to False.

        Returns:
            InvolutionRecord: verified record.

        """
        random: IRandomSource = self._random_sources(seed)

        with self.timer.phase("construct"):
            record: InvolutionRecord = self._de_jonquieres.dj_involution(
                curve,
                center,
                random,
                trusted=trusted,
            )

        return self._verified(record, random)

    def random_de_jonquieres(
        self,
        degree: int,
        seed: int,
    ) -> InvolutionRecord:
        """Build a seeded validated De Jonquieres involution.

        Args:
            degree (int): degree d >= 2.
            seed (int): random seed.

        Returns:
            InvolutionRecord: verified record.

        """
        random: IRandomSource = self._random_sources(seed)

        with self.timer.phase("sample"):
            curve, center = self._de_jonquieres.sample_curve(degree, random)

        with self.timer.phase("construct"):
            record: InvolutionRecord = self._de_jonquieres.dj_involution(
                curve,
                center,
                random,
            )

        return self._verified(record, random)

    def de_jonquieres_from_conic(
        self,
        conic: HPoly,
        center: ProjPoint,
        seed: int,
    ) -> InvolutionRecord:
        """Build and verify the quadratic involution of a conic.

        Args:
            conic (HPoly): smooth conic.
            center (ProjPoint): point off the conic.
            seed (int): random seed.

        Returns:
            InvolutionRecord: verified DJ(2) record.

        """
        random: IRandomSource = self._random_sources(seed)

        with self.timer.phase("construct"):
            record: InvolutionRecord = self._de_jonquieres.dj_from_conic(
                conic,
                center,
                random,
            )

        return self._verified(record, random)

    def geiser(
        self,
        points: Sequence[ProjPoint],
        seed: int,
        *,
        interpolate: bool = False,
    ) -> InvolutionRecord:
        """Build the Geiser involution of seven points.

        Args:
            points (Sequence[ProjPoint]): seven points.
            seed (int): random seed.
            interpolate (bool, optional): also recover the degree 8 closed
                form. Defaults to False.

        Returns:
            InvolutionRecord: record.

        """
        random: IRandomSource = self._random_sources(seed)

        with self.timer.phase("configuration"):
            config: PointConfig = self._geiser.configuration(points)

        rational_map: RationalMap | None = None

        if interpolate:
            with self.timer.phase("interpolate"):
                rational_map = self._geiser.interpolated_map(
                    config,
                    random,
                    samples=self._limits.interpolation_samples,
                    coordinate_range=self._limits.sample_range,
                )

        with self.timer.phase("construct"):
            record: InvolutionRecord = self._geiser.record(
                config,
                random,
                rational_map,
            )

        with self.timer.phase("invariant"):
            self._fixed_curves.invariant_of(record)

        return record

    def bertini(
        self,
        points: Sequence[ProjPoint],
        seed: int,
    ) -> InvolutionRecord:
        """Build the Bertini involution of eight points.

        Args:
            points (Sequence[ProjPoint]): eight points.
            seed (int): random seed.

        Returns:
            InvolutionRecord: record.

        """
        random: IRandomSource = self._random_sources(seed)

        with self.timer.phase("configuration"):
            config: PointConfig = self._bertini.configuration(points)

        record: InvolutionRecord = self._bertini.record(config, random)

        with self.timer.phase("invariant"):
            self._fixed_curves.invariant_of(record)

        return record

    def geiser_samples(
        self,
        record: InvolutionRecord,
        count: int,
    ) -> list[SampleEvaluation]:
        """Evaluate the Geiser involution twice at seeded sample points.

        Args:
            record (InvolutionRecord): Geiser record.
            count (int): number of sample points.

        Returns:
            list[SampleEvaluation]: evaluations in draw order.

        """
        return self._samples(record, count, self._geiser.evaluate_with_report)

    def bertini_samples(
        self,
        record: InvolutionRecord,
        count: int,
    ) -> list[SampleEvaluation]:
        """Evaluate the Bertini involution twice at seeded sample points.

        Args:
            record (InvolutionRecord): Bertini record.
            count (int): number of sample points.

        Returns:
            list[SampleEvaluation]: evaluations in draw order.

        """
        return self._samples(
            record,
            count,
            self._bertini.evaluate_with_report,
        )

    def verify(self, sigma: RationalMap, seed: int) -> None:
        """Check that a map is a nontrivial involution.

        Args:
            sigma (RationalMap): map.
            seed (int): random seed for pointwise checks.

        """
        with self.timer.phase("verify"):
            self._classification.verify_involution(
                sigma,
                self._random_sources(seed),
            )

    def fixed_curve(self, sigma: RationalMap) -> FixedCurveSummary:
        """Get the fixed locus of a map.

        Args:
            sigma (RationalMap): involution.

        Returns:
            FixedCurveSummary: fixed curve and its arithmetic genus.

        """
        with self.timer.phase("fixed-curve"):
            curve: HPoly = self._fixed_curves.fixed_locus(sigma)

        return FixedCurveSummary(
            curve=curve,
            genus_bound=self._fixed_curves.plane_genus(curve.degree, ()),
        )

    def classify(self, sigma: RationalMap, seed: int) -> ClassificationResult:
        """Classify a map given by its components.

        Args:
            sigma (RationalMap): map.
            seed (int): random seed.

        Returns:
            ClassificationResult: uncertified classification.

        """
        with self.timer.phase("classify"):
            return self._classification.classify_map(
                sigma,
                self._random_sources(seed),
            )

    def classify_record(
        self,
        record: InvolutionRecord,
    ) -> ClassificationResult:
        """Classify a constructed involution.

        Args:
            record (InvolutionRecord): record.

        Returns:
            ClassificationResult: certified classification.

        """
        with self.timer.phase("classify"):
            return self._classification.classify_record(record)

    def expected_invariant(self, label: str) -> FixedCurveInvariant:
        """Get the invariant attached to a construction label.

        Args:
            label (str): label such as ``DJ(3)``, ``Geiser`` or ``Bertini``.

        Returns:
            FixedCurveInvariant: invariant.

        """
        return FixedCurveInvariant.expected_for(InvolutionKind.parse(label))

    def _verified(
        self,
        record: InvolutionRecord,
        random: IRandomSource,
    ) -> InvolutionRecord:
        if record.rational_map is None:
            return record

        with self.timer.phase("verify"):
            self._classification.verify_involution(record.rational_map, random)

        with self.timer.phase("invariant"):
            self._fixed_curves.invariant_of(record)

        record.mark_verified()
        logger.info("Verified %s", record.kind)
        return record

    def _samples(
        self,
        record: InvolutionRecord,
        count: int,
        evaluate: Evaluate,
    ) -> list[SampleEvaluation]:
        config: PointConfig | None = record.config

        if config is None:
            msg: str = f"{record.kind} has no point configuration."
            raise DomainValidationError(msg)

        random: IRandomSource = self._random_sources(record.seed)
        evaluations: list[SampleEvaluation] = []
        seen: set[ProjPoint] = set(config.points)

        with self.timer.phase("evaluate"):
            for _ in range(count * SAMPLE_DRAW_FACTOR):
                if len(evaluations) == count:
                    break

                point: ProjPoint | None = self._draw_point(random, seen)

                if point is None:
                    continue

                try:
                    image, report = evaluate(config, point, random)
                    round_trip, _ = evaluate(config, image, random)
                except DomainValidationError as error:
                    logger.debug("Skipped sample %s: %s", point, error)
                    continue

                if round_trip != point:
                    msg = (
                        f"{record.kind} sends {point} to {image} and back "
                        f"to {round_trip}."
                    )
                    raise NotInvolutiveError(msg)

                evaluations.append(
                    SampleEvaluation(
                        point=point,
                        image=image,
                        round_trip=round_trip,
                        report=report,
                    ),
                )

        if len(evaluations) < count:
            msg = f"Only {len(evaluations)} of {count} samples evaluated."
            raise DomainValidationError(msg, reason="sampling-failed")

        record.mark_verified()
        return evaluations

    def _draw_point(
        self,
        random: IRandomSource,
        seen: set[ProjPoint],
    ) -> ProjPoint | None:
        bound: int = self._limits.sample_range
        values: list[int] = [random.integer(-bound, bound) for _ in range(3)]

        if not any(values):
            return None

        point: ProjPoint = ProjPoint.of(values)

        if point in seen:
            return None

        seen.add(point)
        return point
