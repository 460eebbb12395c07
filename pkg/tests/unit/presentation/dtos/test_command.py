"""Tests for command request and response data transfer objects."""

import json
from argparse import Namespace
from typing import Any

import pytest

from src.presentation.dtos.cli.command_request import CommandRequest
from src.presentation.dtos.cli.command_response import CommandResponse
from src.presentation.parsers.errors import InputSyntaxError
from src.presentation.utils.exit_codes import ExitCode


@pytest.fixture
def request_namespace() -> Namespace:
    """Parsed arguments of ``lattice exceptionals --n 7``."""
    return Namespace(
        command="lattice",
        action="exceptionals",
        seed=0,
        json=True,
        timing=False,
        verbose=False,
        n=7,
        matrix_file=None,
    )


def test_from_namespace(request_namespace: Namespace) -> None:
    """Test global flags are split from command options.

    Args:
        request_namespace (Namespace): parsed arguments.

    """
    request: CommandRequest = CommandRequest.from_namespace(request_namespace)
    points: int = 7

    assert request.subcommand == "lattice exceptionals"
    assert request.as_json
    assert request.options == {"n": points, "matrix_file": None}
    assert request.get("n") == points
    assert request.get("matrix_file", "-") == "-"


def test_require(request_namespace: Namespace) -> None:
    """Test a missing mandatory option names its flag.

    Args:
        request_namespace (Namespace): parsed arguments.

    """
    request: CommandRequest = CommandRequest.from_namespace(request_namespace)

    with pytest.raises(InputSyntaxError, match="--matrix-file"):
        request.require("matrix_file", "--matrix-file")


def test_json_is_sorted() -> None:
    """Test the JSON rendering is deterministic."""
    response: CommandResponse = CommandResponse({"b": 1, "a": [1, 2]})

    rendered: str = response.as_json()
    document: dict[str, Any] = json.loads(rendered)

    assert rendered.index('"a"') < rendered.index('"b"')
    assert document == {"a": [1, 2], "b": 1}
    assert response.exit_code is ExitCode.success


def test_text_rendering() -> None:
    """Test nested documents become indented lines."""
    response: CommandResponse = CommandResponse(
        {
            "kind": "DJ(2)",
            "notes": [],
            "invariant": {"genus": 0, "label": "empty"},
            "center": None,
            "verified": True,
            "samples": [{"point": "(1:2:3)"}, "(0:1:0)"],
        },
    )

    assert response.as_text().splitlines() == [
        "kind: DJ(2)",
        "notes: []",
        "invariant:",
        "  genus: 0",
        "  label: empty",
        "center: -",
        "verified: true",
        "samples:",
        "  -",
        "    point: (1:2:3)",
        "  - (0:1:0)",
    ]
