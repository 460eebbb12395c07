"""Involution command views."""

from pathlib import Path

from src.application.services.involutions import SampleEvaluation
from src.domain.aggregates.involution_record import InvolutionRecord
from src.domain.entities.rational_map import RationalMap
from src.domain.value_objects.classification_result import (
    ClassificationResult,
)
from src.domain.value_objects.proj_point import ProjPoint
from src.infrastructure.settings import settings
from src.presentation.dtos.cli import serializers
from src.presentation.dtos.cli.command_request import CommandRequest
from src.presentation.dtos.cli.serializers import Document
from src.presentation.parsers.errors import InputSyntaxError
from src.presentation.parsers.point import parse_point, parse_points_file
from src.presentation.parsers.polynomial import parse_poly
from src.presentation.parsers.rational_map import (
    parse_map,
    parse_map_document,
)
from src.presentation.views.cli.context import ViewContext


def dj_view(request: CommandRequest, context: ViewContext) -> Document:
    """Build a De Jonquieres involution from a curve or a random degree.

    Args:
        request (CommandRequest): request.
        context (ViewContext): services.

    Returns:
        Document: record.

    """
    degree: int | None = request.get("random_degree")

    if degree is not None:
        record: InvolutionRecord = (
            context.involutions.random_de_jonquieres(degree, request.seed)
        )
    else:
        record = context.involutions.de_jonquieres(
            parse_poly(request.require("curve", "--curve")),
            parse_point(request.require("center", "--center")),
            request.seed,
            trusted=request.get("trusted", default=False),
        )

    return serializers.record(record)


def dj_conic_view(request: CommandRequest, context: ViewContext) -> Document:
    """Build the quadratic involution of a conic and a point."""
    record: InvolutionRecord = context.involutions.de_jonquieres_from_conic(
        parse_poly(request.require("q", "--q")),
        parse_point(request.require("p", "--p")),
        request.seed,
    )

    return serializers.record(record)


def geiser_view(request: CommandRequest, context: ViewContext) -> Document:
    """Build the Geiser involution and evaluate it at seeded samples.

    Args:
        request (CommandRequest): request.
        context (ViewContext): services.

    Returns:
        Document: record with sample evaluations.

    """
    points: list[ProjPoint] = _points(request, context)
    record: InvolutionRecord = context.involutions.geiser(
        points,
        request.seed,
        interpolate=request.get("interpolate", default=False),
    )
    samples: list[SampleEvaluation] = context.involutions.geiser_samples(
        record,
        request.get("samples", settings.geiser_samples),
    )

    return _with_samples(record, samples)


def bertini_view(request: CommandRequest, context: ViewContext) -> Document:
    """Build the Bertini involution and evaluate it at seeded samples."""
    points: list[ProjPoint] = _points(request, context)
    record: InvolutionRecord = context.involutions.bertini(
        points,
        request.seed,
    )
    samples: list[SampleEvaluation] = context.involutions.bertini_samples(
        record,
        request.get("samples", settings.bertini_samples),
    )

    return _with_samples(record, samples)


def verify_view(request: CommandRequest, context: ViewContext) -> Document:
    """Check that a map is a nontrivial involution."""
    sigma: RationalMap = _map(request, context)
    context.involutions.verify(sigma, request.seed)

    return {
        **serializers.rational_map(sigma),
        "involutive": True,
        "seed": request.seed,
    }


def fixed_curve_view(
    request: CommandRequest,
    context: ViewContext,
) -> Document:
    """Get the fixed locus of a map."""
    return serializers.fixed_curve(
        context.involutions.fixed_curve(_map(request, context)),
    )


def invariant_view(request: CommandRequest, context: ViewContext) -> Document:
    """Get the conjugacy invariant of a label or of a map.

    Args:
        request (CommandRequest): request with ``--kind`` or a map.
        context (ViewContext): services.

    Returns:
        Document: invariant.

    """
    label: str | None = request.get("kind")

    if label is not None:
        return {
            "invariant": serializers.invariant(
                context.involutions.expected_invariant(label),
            ),
        }

    result: ClassificationResult = context.involutions.classify(
        _map(request, context),
        request.seed,
    )

    return {
        "invariant": serializers.invariant(result.invariant),
        "certified": result.certified,
        "seed": request.seed,
    }


def classify_view(request: CommandRequest, context: ViewContext) -> Document:
    """Classify a map given by its components."""
    return {
        **serializers.classification(
            context.involutions.classify(
                _map(request, context),
                request.seed,
            ),
        ),
        "seed": request.seed,
    }


def _points(request: CommandRequest, context: ViewContext) -> list[ProjPoint]:
    path: str | None = request.get("points_file")

    if path is not None:
        return parse_points_file(context.file_system.read_text(Path(path)))

    texts: list[str] = request.get("point", [])

    if not texts:
        msg: str = f"{request.subcommand} needs --points-file or --point."
        raise InputSyntaxError(msg)

    return [parse_point(text) for text in texts]


def _map(request: CommandRequest, context: ViewContext) -> RationalMap:
    path: str | None = request.get("map_file")

    if path is not None:
        return parse_map_document(context.file_system.read_text(Path(path)))

    return parse_map(request.require("map", "--map or --map-file"))


def _with_samples(
    record: InvolutionRecord,
    samples: list[SampleEvaluation],
) -> Document:
    return {
        **serializers.record(record),
        "samples": [serializers.sample(evaluation) for evaluation in samples],
    }
