"""Tests for involution application service."""

import pytest

from src.application.services.involutions import (
    FixedCurveSummary,
    InvolutionAppService,
    SampleEvaluation,
)
from src.application.services.phase_timer import PhaseTimer
from src.domain.aggregates.involution_record import InvolutionRecord
from src.domain.entities.rational_map import RationalMap
from src.domain.exceptions.base import DomainValidationError
from src.domain.exceptions.fixed_curve import NotInvolutiveError
from src.domain.interfaces.random_source import IRandomSource
from src.domain.value_objects.classification_result import (
    ClassificationResult,
)
from src.domain.value_objects.fixed_curve_invariant import FixedCurveInvariant
from src.domain.value_objects.fixed_curve_kind import FixedCurveKind
from src.domain.value_objects.proj_point import ProjPoint
from src.infrastructure.random.splitmix import SplitMix64
from src.presentation.parsers.rational_map import parse_map
from src.presentation.views.cli.context import involution_limits
from tests.utils.configurations import (
    BERTINI_POINTS,
    CONIC,
    GEISER_POINTS,
    NORMAL_CENTER,
)

SEED: int = 0
LABELS: tuple[str, ...] = (
    "DJ(2)",
    "DJ(3)",
    "DJ(4)",
    "DJ(5)",
    "DJ(6)",
    "Geiser",
    "Bertini",
)


@pytest.fixture
def involutions() -> InvolutionAppService:
    """Involution application service fixture."""
    return InvolutionAppService(
        random_sources=SplitMix64,
        limits=involution_limits(),
    )


def test_quadratic_involution_of_conic(
    involutions: InvolutionAppService,
) -> None:
    """Test the conic example end to end."""
    record: InvolutionRecord = involutions.de_jonquieres_from_conic(
        CONIC,
        NORMAL_CENTER,
        SEED,
    )

    assert record.verified
    assert record.rational_map == parse_map("x*y; x*z; y*z")
    assert record.invariant.kind is FixedCurveKind.empty
    assert set(involutions.timer.timings) == {
        "construct",
        "verify",
        "invariant",
    }


@pytest.mark.parametrize(
    argnames="degree",
    argvalues=[3, 4, 5, pytest.param(6, marks=pytest.mark.slow)],
)
def test_random_de_jonquieres(
    involutions: InvolutionAppService,
    degree: int,
) -> None:
    """Test seeded DJ(d) involutions are verified with genus d - 2.

    Args:
        involutions (InvolutionAppService): service.
        degree (int): degree d.

    """
    record: InvolutionRecord = involutions.random_de_jonquieres(
        degree,
        SEED,
    )

    assert record.verified
    assert record.kind.label == f"DJ({degree})"
    assert record.rational_map is not None
    assert record.rational_map.degree == degree
    assert record.invariant.kind is FixedCurveKind.hyperelliptic
    assert record.invariant.genus == degree - 2

    result: ClassificationResult = involutions.classify_record(record)

    assert result.certified
    assert result.kind == record.kind
    assert result.center == record.center


def test_random_de_jonquieres_is_deterministic(
    involutions: InvolutionAppService,
) -> None:
    """Test one seed gives one involution."""
    degree: int = 3

    first: InvolutionRecord = involutions.random_de_jonquieres(degree, SEED)
    second: InvolutionRecord = involutions.random_de_jonquieres(degree, SEED)

    assert first.rational_map == second.rational_map
    assert first.fixed_curve == second.fixed_curve
    assert first.center == second.center


def test_geiser_samples(involutions: InvolutionAppService) -> None:
    """Test seeded Geiser evaluations return every sample."""
    count: int = 3
    record: InvolutionRecord = involutions.geiser(GEISER_POINTS, SEED)

    samples: list[SampleEvaluation] = involutions.geiser_samples(
        record,
        count,
    )

    assert len(samples) == count
    assert all(sample.returned for sample in samples)
    assert all(sample.report.is_balanced for sample in samples)
    assert all(sample.point not in GEISER_POINTS for sample in samples)
    assert record.verified
    assert involutions.classify_record(record).kind == record.kind
    assert record.invariant.kind is FixedCurveKind.non_hyperelliptic_genus_3
    assert involutions.geiser_samples(record, count) == samples


@pytest.mark.slow
def test_geiser_interpolation(involutions: InvolutionAppService) -> None:
    """Test the interpolated degree 8 form agrees with the evaluator."""
    record: InvolutionRecord = involutions.geiser(
        GEISER_POINTS,
        SEED,
        interpolate=True,
    )
    point: ProjPoint = ProjPoint((2, -3, 7))
    expected_degree: int = 8

    assert record.rational_map is not None
    assert record.rational_map.degree == expected_degree
    assert record.rational_map.evaluate(point) == record.evaluate(point)
    assert involutions.classify(record.rational_map, SEED).kind == (
        record.kind
    )


@pytest.mark.slow
def test_bertini_samples(involutions: InvolutionAppService) -> None:
    """Test seeded Bertini evaluations return every sample."""
    count: int = 2
    record: InvolutionRecord = involutions.bertini(BERTINI_POINTS, SEED)

    samples: list[SampleEvaluation] = involutions.bertini_samples(
        record,
        count,
    )

    assert len(samples) == count
    assert all(sample.returned for sample in samples)
    assert record.invariant.kind is FixedCurveKind.non_hyperelliptic_genus_4


def test_samples_need_configuration(
    involutions: InvolutionAppService,
) -> None:
    """Test De Jonquieres records have no configuration to sample."""
    record: InvolutionRecord = involutions.de_jonquieres_from_conic(
        CONIC,
        NORMAL_CENTER,
        SEED,
    )

    with pytest.raises(DomainValidationError):
        involutions.geiser_samples(record, 1)


def test_streams_come_from_factory() -> None:
    """Test every seeded stream is opened through the injected factory."""
    seeds: list[int] = []
    requested: int = 42

    def open_stream(seed: int) -> IRandomSource:
        seeds.append(seed)
        return SplitMix64(seed)

    service: InvolutionAppService = InvolutionAppService(
        random_sources=open_stream,
        limits=involution_limits(),
        timer=PhaseTimer(),
    )

    service.verify(parse_map("y; x; z"), requested)
    service.classify(parse_map("x*y; x*z; y*z"), requested)

    assert seeds == [requested, requested]


def test_verify(involutions: InvolutionAppService) -> None:
    """Test a cyclic coordinate permutation is not an involution."""
    swap: RationalMap = parse_map("y; x; z")
    cycle: RationalMap = parse_map("y; z; x")

    involutions.verify(swap, SEED)

    with pytest.raises(NotInvolutiveError) as error:
        involutions.verify(cycle, SEED)

    assert error.value.reason == "not-involutive"


def test_fixed_curve(involutions: InvolutionAppService) -> None:
    """Test the fixed conic of the quadratic involution."""
    summary: FixedCurveSummary = involutions.fixed_curve(
        parse_map("x*y; x*z; y*z"),
    )

    assert str(summary.curve) == "x*z - y^2"
    assert summary.genus_bound == 0


def test_classify(involutions: InvolutionAppService) -> None:
    """Test a raw map is classified without certificate."""
    result: ClassificationResult = involutions.classify(
        parse_map("x*y; x*z; y*z"),
        SEED,
    )

    assert result.kind.label == "DJ(2)"
    assert not result.certified


@pytest.mark.parametrize(
    argnames=("label", "kind", "genus"),
    argvalues=[
        ("DJ(2)", FixedCurveKind.empty, 0),
        ("DJ(3)", FixedCurveKind.hyperelliptic, 1),
        ("DJ(5)", FixedCurveKind.hyperelliptic, 3),
        ("Geiser", FixedCurveKind.non_hyperelliptic_genus_3, 3),
        ("Bertini", FixedCurveKind.non_hyperelliptic_genus_4, 4),
    ],
)
def test_expected_invariant(
    involutions: InvolutionAppService,
    label: str,
    kind: FixedCurveKind,
    genus: int,
) -> None:
    """Test invariants attached to construction labels.

    Args:
        involutions (InvolutionAppService): service.
        label (str): label.
        kind (FixedCurveKind): expected kind.
        genus (int): expected genus.

    """
    invariant: FixedCurveInvariant = involutions.expected_invariant(label)

    assert invariant.kind is kind
    assert invariant.genus == genus


def test_invariants_separate_labels(
    involutions: InvolutionAppService,
) -> None:
    """Test distinct construction labels never share an invariant."""
    invariants: set[FixedCurveInvariant] = {
        involutions.expected_invariant(label) for label in LABELS
    }

    assert len(invariants) == len(LABELS)
