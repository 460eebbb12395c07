"""Domain object to JSON document conversion."""

from typing import Any

from sympy import Rational

from src.application.services.involutions import (
    FixedCurveSummary,
    SampleEvaluation,
)
from src.domain.aggregates.involution_record import InvolutionRecord
from src.domain.entities.conic_bundle_model import (
    MIN_FIBRES,
    ConicBundleModel,
)
from src.domain.entities.lattice_involution import LatticeInvolution
from src.domain.entities.pic_lattice import PicLattice
from src.domain.entities.rational_map import RationalMap
from src.domain.value_objects.classification_result import (
    ClassificationResult,
)
from src.domain.value_objects.div_class import DivClass
from src.domain.value_objects.elementary_step import ElementaryStep
from src.domain.value_objects.fixed_curve_invariant import FixedCurveInvariant
from src.domain.value_objects.minimality_result import MinimalityResult
from src.domain.value_objects.pair_classification import PairClassification
from src.domain.value_objects.plane_reduction import PlaneReduction
from src.domain.value_objects.point_config import PointConfig
from src.domain.value_objects.proj_point import ProjPoint
from src.domain.value_objects.residual_report import ResidualReport

type Document = dict[str, Any]


def rational(value: Rational | int) -> str:
    """Serialize a rational number as ``p/q`` or ``p``."""
    return str(Rational(value))


def point(value: ProjPoint | None) -> str | None:
    """Serialize a point as ``(a:b:c)``."""
    return None if value is None else str(value)


def rational_map(value: RationalMap) -> Document:
    """Serialize a map with its degree and component strings."""
    return {"degree": value.degree, "components": value.to_strings()}


def invariant(value: FixedCurveInvariant) -> Document:
    """Serialize a fixed curve invariant."""
    return {
        "label": value.label,
        "kind": str(value.kind),
        "genus": value.genus,
        "source": value.source.label,
    }


def configuration(value: PointConfig) -> Document:
    """Serialize a validated point configuration."""
    return {
        "points": [str(member) for member in value.points],
        "system_dimension": value.report.system_dimension,
        "expected_dimension": value.report.expected_dimension,
        "no_three_collinear": value.report.no_three_collinear,
    }


def record(value: InvolutionRecord) -> Document:
    """Serialize a constructed involution.

    Args:
        value (InvolutionRecord): record.

    Returns:
        Document: kind, degree, map, fixed curve, invariant and provenance.

    """
    document: Document = {
        "kind": value.kind.label,
        "degree": value.kind.degree,
        "components": (
            None
            if value.rational_map is None
            else value.rational_map.to_strings()
        ),
        "fixed_curve": (
            None if value.fixed_curve is None else str(value.fixed_curve)
        ),
        "invariant": invariant(value.invariant),
        "center": point(value.center),
        "verified": value.verified,
        "seed": value.seed,
    }

    if value.dj_data is not None:
        document["validation"] = {
            "trusted": value.dj_data.report.trusted,
            "smooth_elsewhere_certified": (
                value.dj_data.report.smooth_elsewhere_certified
            ),
            "projections": value.dj_data.report.projections,
        }

    if value.config is not None:
        document["configuration"] = configuration(value.config)

    return document


def residual_report(value: ResidualReport) -> Document:
    """Serialize elimination bookkeeping."""
    return {
        "total_degree": value.total_degree,
        "known_degrees": list(value.known_degrees),
        "residual_degree": value.residual_degree,
        "attempts": value.attempts,
        "candidates": value.candidates,
        "balanced": value.is_balanced,
    }


def sample(value: SampleEvaluation) -> Document:
    """Serialize one evaluated sample."""
    return {
        "point": str(value.point),
        "image": str(value.image),
        "round_trip": value.returned,
        "residual": residual_report(value.report),
    }


def fixed_curve(value: FixedCurveSummary) -> Document:
    """Serialize a fixed locus."""
    return {
        "fixed_curve": str(value.curve),
        "degree": value.curve.degree,
        "arithmetic_genus": value.genus_bound,
    }


def classification(value: ClassificationResult) -> Document:
    """Serialize a classification result."""
    return {
        "kind": value.kind.label,
        "degree": value.kind.degree,
        "invariant": invariant(value.invariant),
        "certified": value.certified,
        "center": point(value.center),
        "notes": list(value.notes),
    }


def divisor(value: DivClass) -> Document:
    """Serialize a divisor class."""
    return {"class": str(value), "coordinates": list(value.coordinates)}


def lattice(value: PicLattice) -> Document:
    """Serialize a Picard lattice."""
    return {
        "kind": str(value.kind),
        "rank": value.rank,
        "points": value.points,
        "k_squared": value.k_squared,
        "gram": [
            [int(entry) for entry in value.gram.row(row)]
            for row in range(value.rank)
        ],
        "canonical": divisor(value.canonical),
    }


def lattice_involution(value: LatticeInvolution, fixed_rank: int) -> Document:
    """Serialize a lattice involution with its invariant rank."""
    return {"matrix": value.rows(), "fixed_rank": fixed_rank}


def minimality(value: MinimalityResult) -> Document:
    """Serialize a minimality verdict."""
    witness: Document | None = None

    if value.witness is not None and value.image is not None:
        witness = {
            "class": divisor(value.witness),
            "image": divisor(value.image),
            "failure": str(value.failure),
            "intersection": value.intersection,
        }

    return {"minimal": value.minimal, "witness": witness}


def pair(value: PairClassification) -> Document:
    """Serialize a lattice pair classification."""
    return {
        "label": str(value.label),
        "fixed_rank": value.fixed_rank,
        **minimality(value.minimality),
        "stable_pencils": [divisor(pencil) for pencil in value.stable_pencils],
    }


def conic_bundle(value: ConicBundleModel) -> Document:
    """Serialize a conic bundle model."""
    return {
        "index": value.index,
        "fibre_count": value.fibre_count,
        "contacts": list(value.contacts),
        "pending": value.pending,
        "section_square": value.section_square,
        "genus": (
            value.genus
            if value.fibre_count >= MIN_FIBRES and value.fibre_count % 2 == 0
            else None
        ),
    }


def step(value: ElementaryStep) -> Document:
    """Serialize one elementary transformation."""
    return {
        "on_section": value.on_section,
        "at_contact": value.at_contact,
        "index_before": value.index_before,
        "index_after": value.index_after,
    }


def reduction(value: PlaneReduction) -> Document:
    """Serialize a reduction to a plane model."""
    return {
        "genus": value.genus,
        "plane_degree": value.plane_degree,
        "kind": f"DJ({value.plane_degree})",
        "center_multiplicity": value.center_multiplicity,
        "steps": [step(member) for member in value.steps],
    }
