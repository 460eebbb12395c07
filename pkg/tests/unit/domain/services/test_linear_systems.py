"""Tests for linear system domain service."""

import pytest
from sympy import Rational

from src.domain.exceptions.involutions import DegenerateConfigurationError
from src.domain.services.exact_algebra import ExactAlgebraService
from src.domain.services.linear_systems import LinearSystemService
from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.point_config import PointConfig
from src.domain.value_objects.proj_point import ProjPoint
from tests.utils.configurations import BERTINI_POINTS, GEISER_POINTS


def test_vanishing_conditions_of_cubics(
    systems: LinearSystemService,
    algebra: ExactAlgebraService,
) -> None:
    """Test the 7 x 10 condition matrix has a 3 dimensional kernel."""
    rows: list[list[Rational]] = systems.vanishing_rows(GEISER_POINTS, 3)
    expected_dimension: int = 3

    assert len(rows) == len(GEISER_POINTS)
    assert len(algebra.kernel(rows, len(rows[0]))) == expected_dimension


def test_cubic_system(systems: LinearSystemService) -> None:
    """Test every basis cubic vanishes at every point."""
    cubics: list[HPoly] = systems.cubic_system(GEISER_POINTS)
    expected_dimension: int = 3
    cubic_degree: int = 3

    assert len(cubics) == expected_dimension

    for cubic in cubics:
        assert cubic.degree == cubic_degree
        assert all(
            cubic.evaluate(point.rationals) == 0 for point in GEISER_POINTS
        )


def test_sextic_system(systems: LinearSystemService) -> None:
    """Test the four sextics are singular at the eight points."""
    sextics: list[HPoly] = systems.sextic_system(BERTINI_POINTS)
    expected_dimension: int = 4

    assert len(sextics) == expected_dimension

    for sextic in sextics:
        assert all(
            sextic.multiplicity_at(point.rationals) > 1
            for point in BERTINI_POINTS
        )


def test_through_point(systems: LinearSystemService) -> None:
    """Test the pencil of cubics through an extra point."""
    cubics: list[HPoly] = systems.cubic_system(GEISER_POINTS)
    extra: ProjPoint = ProjPoint((2, 3, 5))

    pencil: list[HPoly] = systems.through_point(cubics, extra)

    assert len(pencil) == len(cubics) - 1
    assert all(cubic.evaluate(extra.rationals) == 0 for cubic in pencil)
    assert set(systems.through_point(cubics, GEISER_POINTS[0])) == set(
        cubics,
    )


@pytest.mark.parametrize(
    argnames="points",
    argvalues=[
        GEISER_POINTS[:6],
        [*GEISER_POINTS[:6], GEISER_POINTS[0]],
        [*GEISER_POINTS[:5], ProjPoint((1, 1, 0)), ProjPoint((2, 2, 1))],
    ],
)
def test_degenerate_geiser_configuration(
    systems: LinearSystemService,
    points: list[ProjPoint],
) -> None:
    """Test wrong counts, repeated points and collinear triples.

    Args:
        systems (LinearSystemService): service.
        points (list[ProjPoint]): configuration.

    """
    with pytest.raises(DegenerateConfigurationError):
        systems.geiser_configuration(points)


def test_bertini_configuration_with_coincident_points(
    systems: LinearSystemService,
) -> None:
    """Test two coincident points."""
    with pytest.raises(DegenerateConfigurationError):
        systems.bertini_configuration(
            [*BERTINI_POINTS[:7], ProjPoint((2, 2, 2))],
        )


def test_configuration_report(systems: LinearSystemService) -> None:
    """Test the report of a valid configuration."""
    config: PointConfig = systems.bertini_configuration(BERTINI_POINTS)

    assert config.report.is_valid
    assert config.report.system_dimension == config.report.expected_dimension
    assert config.size == len(BERTINI_POINTS)
