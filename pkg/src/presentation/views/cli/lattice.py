"""Lattice and conic bundle command views."""

from pathlib import Path

from src.domain.entities.conic_bundle_model import ConicBundleModel
from src.domain.entities.lattice_involution import LatticeInvolution
from src.domain.entities.pic_lattice import PicLattice
from src.domain.value_objects.div_class import DivClass
from src.presentation.dtos.cli import serializers
from src.presentation.dtos.cli.command_request import CommandRequest
from src.presentation.dtos.cli.serializers import Document
from src.presentation.parsers.errors import InputSyntaxError
from src.presentation.parsers.matrix import parse_matrix_file
from src.presentation.views.cli.context import ViewContext


def lattice_make_view(
    request: CommandRequest,
    context: ViewContext,
) -> Document:
    """Describe a blow-up or quadric lattice."""
    return serializers.lattice(_lattice(request, context))


def lattice_reflect_view(
    request: CommandRequest,
    context: ViewContext,
) -> Document:
    """Build the reflection through a root."""
    lattice: PicLattice = _lattice(request, context)
    reflection: LatticeInvolution = context.lattices.reflection(
        lattice,
        parse_integers(request.require("root", "--root")),
    )

    return serializers.lattice_involution(
        reflection,
        context.lattices.fixed_rank(reflection),
    )


def lattice_exceptionals_view(
    request: CommandRequest,
    context: ViewContext,
) -> Document:
    """Enumerate exceptional classes.

    Args:
        request (CommandRequest): request with ``--n`` or ``--quadric``.
        context (ViewContext): services.

    Returns:
        Document: count and ordered classes.

    """
    lattice: PicLattice = _lattice(request, context)
    classes: list[DivClass] = context.lattices.exceptional_classes(lattice)

    return {
        "lattice": serializers.lattice(lattice),
        "count": len(classes),
        "classes": [str(divisor) for divisor in classes],
    }


def lattice_minimal_view(
    request: CommandRequest,
    context: ViewContext,
) -> Document:
    """Run the minimality test on a lattice involution."""
    involution: LatticeInvolution = _involution(request, context)

    return {
        **serializers.lattice_involution(
            involution,
            context.lattices.fixed_rank(involution),
        ),
        **serializers.minimality(context.lattices.minimality(involution)),
    }


def lattice_classify_view(
    request: CommandRequest,
    context: ViewContext,
) -> Document:
    """Classify a lattice pair."""
    involution: LatticeInvolution = _involution(request, context)

    return {
        "lattice": serializers.lattice(involution.lattice),
        **serializers.pair(context.lattices.classify(involution)),
    }


def elmt_view(request: CommandRequest, context: ViewContext) -> Document:
    """Apply one elementary transformation or a full reduction.

    Args:
        request (CommandRequest): request with the model and the step.
        context (ViewContext): services.

    Returns:
        Document: models before and after, or the reduction log.

    """
    model: ConicBundleModel = _model(request)

    if request.get("reduce", default=False):
        return {
            "model": serializers.conic_bundle(model),
            "reduction": serializers.reduction(context.lattices.reduce(model)),
        }

    transformed: ConicBundleModel = context.lattices.elementary_transformation(
        model,
        on_section=request.get("on_section", default=False),
        at_contact=request.get("at_contact"),
    )

    return {
        "model": serializers.conic_bundle(model),
        "result": serializers.conic_bundle(transformed),
    }


def parse_integers(text: str) -> list[int]:
    """Parse comma or whitespace separated integers.

    Args:
        text (str): e.g. ``"0,1,-1,0"``.

    Raises:
        InputSyntaxError: a token is not an integer.

    Returns:
        list[int]: values.

    """
    tokens: list[str] = text.replace(",", " ").split()

    try:
        return [int(token) for token in tokens]
    except ValueError:
        msg: str = f"Expected integers, got {text!r}."
        raise InputSyntaxError(msg) from None


def _lattice(request: CommandRequest, context: ViewContext) -> PicLattice:
    return context.lattices.lattice(
        request.require("n", "--n") if not request.get("quadric") else 0,
        quadric=request.get("quadric", default=False),
    )


def _involution(
    request: CommandRequest,
    context: ViewContext,
) -> LatticeInvolution:
    if request.get("dj_quadratic", default=False):
        return context.lattices.dj_quadratic()

    path: str | None = request.get("matrix_file")

    if path is not None:
        rows: list[list[int]] = parse_matrix_file(
            context.file_system.read_text(Path(path)),
        )
        lattice: PicLattice = context.lattices.lattice(
            request.get("n", len(rows) - 1),
            quadric=request.get("quadric", default=False),
        )
        return context.lattices.from_rows(lattice, rows)

    lattice = _lattice(request, context)

    if request.get("anti_canonical", default=False):
        return context.lattices.anti_canonical(lattice)

    if request.get("swap", default=False):
        return context.lattices.swap(lattice)

    if request.get("identity", default=False):
        return context.lattices.identity(lattice)

    root: str | None = request.get("root")

    if root is not None:
        return context.lattices.reflection(lattice, parse_integers(root))

    msg: str = (
        f"{request.subcommand} needs --matrix-file, --anti-canonical, "
        "--dj-quadratic, --swap, --identity or --root."
    )
    raise InputSyntaxError(msg)


def _model(request: CommandRequest) -> ConicBundleModel:
    degree: int | None = request.get("from_dj")

    if degree is not None:
        return ConicBundleModel.from_de_jonquieres(degree)

    contacts: str = request.get("contacts", "")

    return ConicBundleModel(
        index=request.require("n", "--n"),
        fibre_count=request.require("s", "--s"),
        contacts=tuple(parse_integers(contacts)),
    )
