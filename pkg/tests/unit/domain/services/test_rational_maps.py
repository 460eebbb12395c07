"""Tests for rational map domain service."""

import pytest
from sympy import Expr, ImmutableMatrix

from src.domain.entities.rational_map import RationalMap
from src.domain.exceptions.projective import (
    IndeterminatePointError,
    InterpolationError,
    NotInverseError,
)
from src.domain.services.rational_maps import RationalMapService
from src.domain.value_objects.hpoly import X, Y, Z, HPoly
from src.domain.value_objects.proj_point import ProjPoint

QUADRATIC: RationalMap = RationalMap(
    [HPoly.from_expr(X * Y), HPoly.from_expr(X * Z), HPoly.from_expr(Y * Z)],
)
SWAP: RationalMap = RationalMap.linear(
    ImmutableMatrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]]),
)
SAMPLES: list[ProjPoint] = [
    ProjPoint(coordinates)
    for coordinates in (
        (1, 2, 3),
        (2, 3, 5),
        (3, 1, 4),
        (1, 5, 2),
        (4, 1, 7),
        (2, 7, 3),
        (5, 3, 1),
        (1, 4, 9),
        (6, 1, 2),
        (3, 8, 5),
        (7, 2, 9),
        (2, 9, 4),
    )
]


def make_map(*expressions: Expr) -> RationalMap:
    """Make a map from three expressions.

    Args:
        *expressions (Expr): components.

    Returns:
        RationalMap: map.

    """
    return RationalMap(
        [HPoly.from_expr(expression) for expression in expressions],
    )


def test_compose_with_identity(maps: RationalMapService) -> None:
    """Test the identity is neutral."""
    assert maps.compose(RationalMap.identity(), QUADRATIC) == QUADRATIC
    assert maps.compose(QUADRATIC, RationalMap.identity()) == QUADRATIC


def test_quadratic_map_squares_to_identity(maps: RationalMapService) -> None:
    """Test (xy:xz:yz) composed with itself loses the factor xyz."""
    assert maps.compose(QUADRATIC, QUADRATIC) == RationalMap.identity()


@pytest.mark.parametrize(
    argnames=("rational_map", "expected"),
    argvalues=[
        (RationalMap.identity(), True),
        (make_map(X**2, X * Y, X * Z), True),
        (make_map(Y, X, Z), False),
        (QUADRATIC, False),
    ],
)
def test_is_identity(
    maps: RationalMapService,
    rational_map: RationalMap,
    *,
    expected: bool,
) -> None:
    """Test identity detection through the fixed-point minors.

    Args:
        maps (RationalMapService): service.
        rational_map (RationalMap): map.
        expected (bool): whether it is the identity.

    """
    assert maps.is_identity(rational_map) is expected


@pytest.mark.parametrize(
    argnames=("rational_map", "expected"),
    argvalues=[
        (QUADRATIC, True),
        (SWAP, True),
        (make_map(Y, X, Z), True),
        (make_map(X, Y, 2 * Z), False),
        (make_map(Y, Z, X), False),
    ],
)
def test_is_involution(
    maps: RationalMapService,
    rational_map: RationalMap,
    *,
    expected: bool,
) -> None:
    """Test symbolic and pointwise involution checks agree.

    Args:
        maps (RationalMapService): service.
        rational_map (RationalMap): map.
        expected (bool): whether it squares to the identity.

    """
    assert maps.is_involution(rational_map) is expected
    assert maps.is_involution_pointwise(rational_map, SAMPLES) is expected


@pytest.mark.parametrize(
    argnames=("point", "expected"),
    argvalues=[
        ((1, 1, 1), (1, 1, 1)),
        ((1, 2, 4), (1, 2, 4)),
        ((1, 2, 3), (2, 3, 6)),
        ((0, 1, 0), None),
        ((1, 0, 0), None),
        ((0, 0, 1), None),
    ],
)
def test_eval_map(
    maps: RationalMapService,
    point: tuple[int, int, int],
    expected: tuple[int, int, int] | None,
) -> None:
    """Test evaluation of the quadratic map and its base points.

    Args:
        maps (RationalMapService): service.
        point (tuple[int, int, int]): point.
        expected (tuple[int, int, int] | None): image, None at base points.

    """
    image: ProjPoint | None = maps.eval_map(QUADRATIC, ProjPoint(point))

    assert image == (None if expected is None else ProjPoint(expected))


def test_eval_map_strict(maps: RationalMapService) -> None:
    """Test strict evaluation at a base point."""
    with pytest.raises(IndeterminatePointError):
        maps.eval_map(QUADRATIC, ProjPoint((0, 1, 0)), strict=True)


def test_conjugate(maps: RationalMapService) -> None:
    """Test conjugation by the identity and by a symmetry of the map."""
    identity: RationalMap = RationalMap.identity()
    conjugated: RationalMap = maps.conjugate(QUADRATIC, SWAP, SWAP)

    assert maps.conjugate(QUADRATIC, identity, identity) == QUADRATIC
    assert conjugated == QUADRATIC
    assert maps.is_involution(maps.conjugate(make_map(Y, X, Z), SWAP, SWAP))


def test_conjugate_needs_inverse(maps: RationalMapService) -> None:
    """Test a wrong inverse is rejected."""
    with pytest.raises(NotInverseError):
        maps.conjugate(QUADRATIC, SWAP, RationalMap.identity())


def test_interpolate(maps: RationalMapService) -> None:
    """Test recovering the quadratic map from its values."""
    pairs: list[tuple[ProjPoint, ProjPoint]] = []

    for point in SAMPLES:
        image: ProjPoint | None = QUADRATIC.evaluate(point)
        assert image is not None
        pairs.append((point, image))

    assert maps.interpolate(pairs, 2) == QUADRATIC

    with pytest.raises(InterpolationError):
        maps.interpolate(pairs, 3)
