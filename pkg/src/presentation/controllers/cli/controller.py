"""Command line controller."""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence

from src.domain.exceptions.base import DomainValidationError
from src.infrastructure.log_config import configure_logging
from src.infrastructure.random.splitmix import MASK
from src.infrastructure.settings import settings
from src.presentation.dtos.cli.command_request import CommandRequest
from src.presentation.dtos.cli.command_response import CommandResponse
from src.presentation.dtos.cli.serializers import Document
from src.presentation.utils.exit_codes import ExitCode
from src.presentation.views.cli.context import ViewContext
from src.presentation.views.cli.involutions import (
    bertini_view,
    classify_view,
    dj_conic_view,
    dj_view,
    fixed_curve_view,
    geiser_view,
    invariant_view,
    verify_view,
)
from src.presentation.views.cli.lattice import (
    elmt_view,
    lattice_classify_view,
    lattice_exceptionals_view,
    lattice_make_view,
    lattice_minimal_view,
    lattice_reflect_view,
)

logger: logging.Logger = logging.getLogger(__name__)

type View = Callable[[CommandRequest, ViewContext], Document]

VIEWS: dict[str, View] = {
    "dj": dj_view,
    "dj-conic": dj_conic_view,
    "geiser": geiser_view,
    "bertini": bertini_view,
    "verify": verify_view,
    "fixed-curve": fixed_curve_view,
    "invariant": invariant_view,
    "classify": classify_view,
    "lattice make": lattice_make_view,
    "lattice reflect": lattice_reflect_view,
    "lattice exceptionals": lattice_exceptionals_view,
    "lattice minimal": lattice_minimal_view,
    "lattice classify": lattice_classify_view,
    "elmt": elmt_view,
}

LATTICE_ACTIONS: tuple[str, ...] = (
    "make",
    "reflect",
    "exceptionals",
    "minimal",
    "classify",
)


def main(
    argv: Sequence[str] | None = None,
    context: ViewContext | None = None,
) -> int:
    """Run one command.

    Args:
        argv (Sequence[str] | None, optional): arguments without the program
            name. Defaults to ``sys.argv[1:]``.
        context (ViewContext | None, optional): services, replaced in tests.
            Defaults to None.

    Returns:
        int: exit code.

    """
    request: CommandRequest = CommandRequest.from_namespace(
        build_parser().parse_args(argv),
    )
    configure_logging(verbose=request.verbose)
    response: CommandResponse = run(request, context or ViewContext())

    sys.stdout.write(
        response.as_json() if request.as_json else response.as_text(),
    )
    sys.stdout.write("\n")
    return int(response.exit_code)


def run(request: CommandRequest, context: ViewContext) -> CommandResponse:
    """Dispatch a request to its view.

    Args:
        request (CommandRequest): request.
        context (ViewContext): services.

    Returns:
        CommandResponse: output document and exit code.

    """
    try:
        body: Document = {
            "command": request.subcommand,
            **VIEWS[request.subcommand](request, context),
        }
    except DomainValidationError as error:
        logger.info("Validation failure: %s", error)
        return CommandResponse(
            body={"error": {"reason": error.reason, "message": str(error)}},
            exit_code=ExitCode.validation_failure,
        )
    except OSError as error:
        return CommandResponse(
            body={"error": {"reason": "io", "message": str(error)}},
            exit_code=ExitCode.validation_failure,
        )
    except Exception as error:
        logger.exception("Internal error")
        return CommandResponse(
            body={"error": {"reason": "internal", "message": str(error)}},
            exit_code=ExitCode.internal_error,
        )

    if request.timing:
        body["timing"] = {
            phase: round(seconds, 6)
            for phase, seconds in context.timer.timings.items()
        }

    return CommandResponse(body=body)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser.

    Returns:
        argparse.ArgumentParser: parser with every subcommand.

    """
    common: argparse.ArgumentParser = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=settings.default_seed)
    common.add_argument("--json", action="store_true")
    common.add_argument("--timing", action="store_true")
    common.add_argument("--verbose", action="store_true")

    parser: argparse.ArgumentParser = argparse.ArgumentParser(
        prog="cremona-involutions",
        description="Exact constructions of plane birational involutions.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    _add_involution_commands(commands, common)
    _add_map_commands(commands, common)
    _add_lattice_commands(commands, common)

    return parser


def _add_involution_commands(
    commands: argparse._SubParsersAction,  # noqa: SLF001
    common: argparse.ArgumentParser,
) -> None:
    dj = commands.add_parser(
        "dj",
        parents=[common],
        help="De Jonquieres involution of a curve and a center.",
    )
    dj.add_argument("--curve")
    dj.add_argument("--center")
    dj.add_argument("--trusted", action="store_true")
    dj.add_argument("--random-degree", type=int)

    conic = commands.add_parser(
        "dj-conic",
        parents=[common],
        help="Quadratic involution of a conic and a point.",
    )
    conic.add_argument("--q", required=True)
    conic.add_argument("--p", required=True)

    for name, samples, helptext in (
        ("geiser", settings.geiser_samples, "Geiser involution."),
        ("bertini", settings.bertini_samples, "Bertini involution."),
    ):
        command = commands.add_parser(name, parents=[common], help=helptext)
        points = command.add_mutually_exclusive_group()
        points.add_argument("--points-file")
        points.add_argument("--point", action="append")
        command.add_argument("--samples", type=int, default=samples)

        if name == "geiser":
            command.add_argument("--interpolate", action="store_true")


def _add_map_commands(
    commands: argparse._SubParsersAction,  # noqa: SLF001
    common: argparse.ArgumentParser,
) -> None:
    for name, helptext in (
        ("verify", "Check that a map is a nontrivial involution."),
        ("fixed-curve", "Fixed locus of a map."),
        ("invariant", "Conjugacy invariant of a map or a label."),
        ("classify", "Classify a map given by its components."),
    ):
        command = commands.add_parser(name, parents=[common], help=helptext)
        source = command.add_mutually_exclusive_group()
        source.add_argument("--map-file")
        source.add_argument("--map")

        if name == "invariant":
            source.add_argument("--kind")


def _add_lattice_commands(
    commands: argparse._SubParsersAction,  # noqa: SLF001
    common: argparse.ArgumentParser,
) -> None:
    lattice = commands.add_parser(
        "lattice",
        parents=[common],
        help="Picard lattices and their involutions.",
    )
    lattice.add_argument("action", choices=LATTICE_ACTIONS)
    lattice.add_argument("--n", type=int)
    lattice.add_argument("--quadric", action="store_true")
    lattice.add_argument("--matrix-file")
    lattice.add_argument("--anti-canonical", action="store_true")
    lattice.add_argument("--dj-quadratic", action="store_true")
    lattice.add_argument("--identity", action="store_true")
    lattice.add_argument("--swap", action="store_true")
    lattice.add_argument("--root")

    elmt = commands.add_parser(
        "elmt",
        parents=[common],
        help="Elementary transformations of conic bundles.",
    )
    elmt.add_argument("--n", type=int)
    elmt.add_argument("--s", type=int)
    elmt.add_argument("--contacts", default="")
    elmt.add_argument("--from-dj", type=int)
    elmt.add_argument("--on-section", action="store_true")
    elmt.add_argument("--at-contact", type=int)
    elmt.add_argument("--reduce", action="store_true")


def _seed(text: str) -> int:
    try:
        seed: int = int(text)
    except ValueError:
        msg: str = f"Seed {text!r} is not an integer."
        raise argparse.ArgumentTypeError(msg) from None

    if not 0 <= seed <= MASK:
        msg = f"Seed {seed} is not an unsigned 64-bit integer."
        raise argparse.ArgumentTypeError(msg)

    return seed
