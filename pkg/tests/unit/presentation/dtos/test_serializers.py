"""Tests for domain object serializers."""

from sympy import Rational

from src.domain.entities.conic_bundle_model import ConicBundleModel
from src.domain.entities.rational_map import RationalMap
from src.domain.services.conic_bundle import ConicBundleService
from src.domain.services.picard import PicardService
from src.domain.value_objects.div_class import DivClass
from src.domain.value_objects.hpoly import X, Y, Z, HPoly
from src.domain.value_objects.proj_point import ProjPoint
from src.domain.value_objects.residual_report import ResidualReport
from src.presentation.dtos.cli import serializers


def test_scalars() -> None:
    """Test rationals and points as strings."""
    assert serializers.rational(Rational(-3, 4)) == "-3/4"
    assert serializers.rational(5) == "5"
    assert serializers.point(ProjPoint((2, 4, 6))) == "(1:2:3)"
    assert serializers.point(None) is None


def test_rational_map() -> None:
    """Test the map document."""
    sigma: RationalMap = RationalMap(
        [HPoly.from_expr(component) for component in (X * Y, X * Z, Y * Z)],
    )

    assert serializers.rational_map(sigma) == {
        "degree": 2,
        "components": ["x*y", "x*z", "y*z"],
    }


def test_residual_report() -> None:
    """Test elimination bookkeeping."""
    report: ResidualReport = ResidualReport(
        total_degree=9,
        known_degrees=(1,) * 8,
        residual_degree=1,
        attempts=2,
    )

    assert serializers.residual_report(report) == {
        "total_degree": 9,
        "known_degrees": [1] * 8,
        "residual_degree": 1,
        "attempts": 2,
        "candidates": 1,
        "balanced": True,
    }


def test_pair_with_witness(picard: PicardService) -> None:
    """Test the minimality witness is spelled out."""
    document: serializers.Document = serializers.pair(
        picard.classify_pair(picard.dj_quadratic_involution()),
    )

    assert document["label"] == "non-minimal"
    assert document["minimal"] is False
    assert document["witness"] == {
        "class": {"class": "E1", "coordinates": [0, 1, 0, 0]},
        "image": {"class": "H - E2 - E3", "coordinates": [1, 0, -1, -1]},
        "failure": "disjoint-from-image",
        "intersection": 0,
    }
    assert document["stable_pencils"] == []


def test_lattice(picard: PicardService) -> None:
    """Test the lattice document of the quadric."""
    assert serializers.lattice(picard.make_quadric_lattice()) == {
        "kind": "quadric",
        "rank": 2,
        "points": 0,
        "k_squared": 8,
        "gram": [[0, 1], [1, 0]],
        "canonical": {"class": "-2H - 2E1", "coordinates": [-2, -2]},
    }


def test_divisor() -> None:
    """Test divisor classes keep their coordinates."""
    assert serializers.divisor(DivClass((3, -1, 0, -2))) == {
        "class": "3H - E1 - 2E3",
        "coordinates": [3, -1, 0, -2],
    }


def test_conic_bundle_without_genus() -> None:
    """Test an odd fibre count has no genus."""
    index: int = 2

    document: serializers.Document = serializers.conic_bundle(
        ConicBundleModel(index=index, fibre_count=3),
    )

    assert document["genus"] is None
    assert document["section_square"] == -index


def test_reduction(conic_bundles: ConicBundleService) -> None:
    """Test the reduction names the resulting De Jonquieres degree."""
    genus: int = 2

    document: serializers.Document = serializers.reduction(
        conic_bundles.reduce_to_plane_model(
            ConicBundleModel(index=0, fibre_count=6, contacts=(2,)),
        ),
    )

    assert document["kind"] == "DJ(4)"
    assert document["center_multiplicity"] == genus
    assert document["steps"][0] == {
        "on_section": False,
        "at_contact": None,
        "index_before": 0,
        "index_after": 1,
    }
