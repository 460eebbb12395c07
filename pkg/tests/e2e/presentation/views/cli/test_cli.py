"""Command line view end-to-end test."""

import json
from pathlib import Path
from typing import Any

import pytest
from jsonschema import Draft202012Validator

from src.infrastructure.repositories.file_system.fake_file_system import (
    FakeFileSystem,
)
from src.presentation.controllers.cli.controller import main
from src.presentation.utils.exit_codes import ExitCode
from src.presentation.views.cli.context import ViewContext
from tests.utils.configurations import GEISER_POINTS_FILE

POINTS_PATH: Path = Path("/input/geiser_points.txt")
SWAP_PATH: Path = Path("/input/swap.txt")


def run_command(
    argv: list[str],
    capsys: pytest.CaptureFixture[str],
    context: ViewContext | None = None,
) -> tuple[int, dict[str, Any]]:
    """Run one command with JSON output.

    Args:
        argv (list[str]): arguments without the program name.
        capsys (pytest.CaptureFixture[str]): output capture.
        context (ViewContext | None, optional): services. Defaults to a
            context over an in-memory file system.

    Returns:
        tuple[int, dict[str, Any]]: exit code and output document.

    """
    exit_code: int = main(
        [*argv, "--json"],
        context or ViewContext(file_system=FakeFileSystem()),
    )

    return exit_code, json.loads(capsys.readouterr().out)


@pytest.fixture
def input_context() -> ViewContext:
    """Context whose file system holds the committed inputs."""
    return ViewContext(
        file_system=FakeFileSystem(
            {
                POINTS_PATH: GEISER_POINTS_FILE.read_text(encoding="utf-8"),
                SWAP_PATH: "2\n0 1\n1 0\n",
            },
        ),
    )


def test_dj_conic(
    capsys: pytest.CaptureFixture[str],
    output_validator: Draft202012Validator,
) -> None:
    """Test the quadratic involution of the conic xz - y^2."""
    exit_code, document = run_command(
        ["dj-conic", "--q", "x*z - y^2", "--p", "(0:1:0)"],
        capsys,
    )

    output_validator.validate(document)
    assert exit_code == ExitCode.success
    assert document["command"] == "dj-conic"
    assert document["components"] == ["x*y", "x*z", "y*z"]
    assert document["kind"] == "DJ(2)"
    assert document["verified"] is True
    assert document["invariant"]["kind"] == "empty"
    assert document["seed"] == 0


def test_dj_random_degree_is_deterministic(
    capsys: pytest.CaptureFixture[str],
    output_validator: Draft202012Validator,
) -> None:
    """Test one seed gives byte-identical documents."""
    argv: list[str] = ["dj", "--random-degree", "3", "--seed", "5"]

    _, first = run_command(argv, capsys)
    _, second = run_command(argv, capsys)

    output_validator.validate(first)
    assert first == second
    assert first["invariant"]["genus"] == 1
    assert first["validation"]["smooth_elsewhere_certified"] is True


def test_timing(capsys: pytest.CaptureFixture[str]) -> None:
    """Test phase timings are reported on request."""
    _, document = run_command(
        ["dj-conic", "--q", "x*z - y^2", "--p", "(0:1:0)", "--timing"],
        capsys,
    )

    assert {"construct", "verify"} <= set(document["timing"])
    assert all(seconds >= 0 for seconds in document["timing"].values())


def test_geiser_points_file(
    capsys: pytest.CaptureFixture[str],
    output_validator: Draft202012Validator,
    input_context: ViewContext,
) -> None:
    """Test the Geiser command reads its configuration.

    Args:
        capsys (pytest.CaptureFixture[str]): output capture.
        output_validator (Draft202012Validator): output schema.
        input_context (ViewContext): context with the committed points.

    """
    samples: int = 2
    eliminant_degree: int = 9
    genus: int = 3

    exit_code, document = run_command(
        [
            "geiser",
            "--points-file",
            str(POINTS_PATH),
            "--samples",
            str(samples),
        ],
        capsys,
        input_context,
    )

    output_validator.validate(document)
    assert exit_code == ExitCode.success
    assert document["kind"] == "Geiser"
    assert document["invariant"]["genus"] == genus
    assert len(document["samples"]) == samples
    assert all(
        sample["residual"]["total_degree"] == eliminant_degree
        for sample in document["samples"]
    )
    assert input_context.file_system.history() == [POINTS_PATH]


def test_verify_rejects_non_involution(
    capsys: pytest.CaptureFixture[str],
    output_validator: Draft202012Validator,
) -> None:
    """Test the cyclic permutation fails with exit code 2."""
    exit_code, document = run_command(
        ["verify", "--map", "y; z; x"],
        capsys,
    )

    output_validator.validate(document)
    assert exit_code == ExitCode.validation_failure
    assert document["error"]["reason"] == "not-involutive"


def test_verify_accepts_involution(
    capsys: pytest.CaptureFixture[str],
    output_validator: Draft202012Validator,
) -> None:
    """Test the quadratic involution passes."""
    exit_code, document = run_command(
        ["verify", "--map", "x*y; x*z; y*z"],
        capsys,
    )

    output_validator.validate(document)
    assert exit_code == ExitCode.success
    assert document["involutive"] is True


@pytest.mark.parametrize(
    argnames=("argv", "reason"),
    argvalues=[
        (
            ["dj-conic", "--q", "x + y^2", "--p", "(0:1:0)"],
            "inhomogeneous",
        ),
        (
            ["dj-conic", "--q", "x*z - y^2", "--p", "(0:0:0)"],
            "zero-point",
        ),
        (["dj-conic", "--q", "x*z -", "--p", "(0:1:0)"], "syntax"),
        (["dj"], "syntax"),
        (["geiser", "--points-file", "/input/missing.txt"], "io"),
        (["lattice", "minimal", "--n", "1"], "syntax"),
        (["lattice", "exceptionals", "--n", "9"], "out-of-scope"),
        (
            ["lattice", "reflect", "--n", "2", "--root", "0,1,0"],
            "invalid-root",
        ),
        (
            ["elmt", "--n", "1", "--s", "8", "--contacts", "1", "--reduce"],
            "invalid-transformation",
        ),
    ],
)
def test_invalid_input(
    capsys: pytest.CaptureFixture[str],
    output_validator: Draft202012Validator,
    argv: list[str],
    reason: str,
) -> None:
    """Test validation failures carry a reason and exit code 2.

    Args:
        capsys (pytest.CaptureFixture[str]): output capture.
        output_validator (Draft202012Validator): output schema.
        argv (list[str]): arguments.
        reason (str): expected reason slug.

    """
    exit_code, document = run_command(argv, capsys)

    output_validator.validate(document)
    assert exit_code == ExitCode.validation_failure
    assert document["error"]["reason"] == reason


def test_invalid_seed(capsys: pytest.CaptureFixture[str]) -> None:
    """Test argument errors stop before any command runs."""
    with pytest.raises(SystemExit) as error:
        main(["dj", "--random-degree", "3", "--seed", "-1"])

    assert error.value.code == ExitCode.validation_failure
    assert "64-bit" in capsys.readouterr().err


def test_lattice_exceptionals(
    capsys: pytest.CaptureFixture[str],
    output_validator: Draft202012Validator,
) -> None:
    """Test the 56 exceptional classes on seven points."""
    count: int = 56

    _, document = run_command(["lattice", "exceptionals", "--n", "7"], capsys)

    output_validator.validate(document)
    assert document["count"] == count
    assert document["classes"][0] == "E1"
    assert len(set(document["classes"])) == count


@pytest.mark.parametrize(
    argnames=("argv", "label"),
    argvalues=[
        (["--n", "8", "--anti-canonical"], "(vi)"),
        (["--n", "7", "--anti-canonical"], "(v)"),
        (["--n", "0", "--identity"], "(iii)"),
        (["--quadric", "--swap"], "(iv)"),
        (["--quadric", "--identity"], "(i)/(ii)"),
        (["--dj-quadratic"], "non-minimal"),
        (["--n", "1", "--identity"], "non-minimal"),
    ],
)
def test_lattice_classify(
    capsys: pytest.CaptureFixture[str],
    output_validator: Draft202012Validator,
    argv: list[str],
    label: str,
) -> None:
    """Test the lattice pair labels.

    Args:
        capsys (pytest.CaptureFixture[str]): output capture.
        output_validator (Draft202012Validator): output schema.
        argv (list[str]): involution arguments.
        label (str): expected label.

    """
    exit_code, document = run_command(["lattice", "classify", *argv], capsys)

    output_validator.validate(document)
    assert exit_code == ExitCode.success
    assert document["label"] == label


def test_lattice_minimal_from_matrix_file(
    capsys: pytest.CaptureFixture[str],
    output_validator: Draft202012Validator,
    input_context: ViewContext,
) -> None:
    """Test a matrix document on the quadric.

    Args:
        capsys (pytest.CaptureFixture[str]): output capture.
        output_validator (Draft202012Validator): output schema.
        input_context (ViewContext): context with the swap matrix.

    """
    _, document = run_command(
        ["lattice", "minimal", "--quadric", "--matrix-file", str(SWAP_PATH)],
        capsys,
        input_context,
    )

    output_validator.validate(document)
    assert document["matrix"] == [[0, 1], [1, 0]]
    assert document["minimal"] is True
    assert document["witness"] is None


def test_dj_quadratic_witness(
    capsys: pytest.CaptureFixture[str],
    output_validator: Draft202012Validator,
) -> None:
    """Test the witness of the quadratic De Jonquieres action."""
    _, document = run_command(
        ["lattice", "minimal", "--dj-quadratic"],
        capsys,
    )

    output_validator.validate(document)
    assert document["minimal"] is False
    assert document["witness"]["class"]["class"] == "E1"
    assert document["witness"]["image"]["class"] == "H - E2 - E3"
    assert document["witness"]["failure"] == "disjoint-from-image"


def test_elmt_reduction(
    capsys: pytest.CaptureFixture[str],
    output_validator: Draft202012Validator,
) -> None:
    """Test a genus 3 model on F_3 reduces to DJ(5)."""
    steps: int = 4

    _, document = run_command(
        ["elmt", "--n", "3", "--s", "8", "--contacts", "2,1", "--reduce"],
        capsys,
    )

    output_validator.validate(document)
    assert document["reduction"]["kind"] == "DJ(5)"
    assert len(document["reduction"]["steps"]) == steps


def test_invariant_of_label(
    capsys: pytest.CaptureFixture[str],
    output_validator: Draft202012Validator,
) -> None:
    """Test the invariant attached to the Bertini label."""
    _, document = run_command(["invariant", "--kind", "Bertini"], capsys)

    output_validator.validate(document)
    assert document["invariant"]["kind"] == (
        "non-hyperelliptic-genus-4-on-singular-quadric"
    )


def test_text_output(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the default human readable output."""
    exit_code: int = main(
        ["lattice", "make", "--n", "2"],
        ViewContext(file_system=FakeFileSystem()),
    )

    output: str = capsys.readouterr().out

    assert exit_code == ExitCode.success
    assert "command: lattice make" in output
    assert "k_squared: 7" in output
