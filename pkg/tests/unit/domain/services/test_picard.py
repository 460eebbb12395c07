"""Tests for Picard lattice domain service."""

from itertools import product

import pytest

from src.domain.entities.lattice_involution import LatticeInvolution
from src.domain.entities.pic_lattice import PicLattice
from src.domain.exceptions.lattice import (
    InvalidLatticeInvolutionError,
    LatticeOutOfScopeError,
    ReflectionRootError,
)
from src.domain.services.picard import PicardService
from src.domain.value_objects.div_class import DivClass
from src.domain.value_objects.minimality_failure import MinimalityFailure
from src.domain.value_objects.minimality_result import MinimalityResult
from src.domain.value_objects.pair_classification import PairClassification
from src.domain.value_objects.pair_label import PairLabel


def brute_force_exceptionals(lattice: PicLattice) -> set[DivClass]:
    """Search a box for classes with square -1 and degree -1.

    Args:
        lattice (PicLattice): small blow-up.

    Returns:
        set[DivClass]: exceptional classes in the box.

    """
    box: range = range(-3, 4)

    return {
        candidate
        for coordinates in product(range(4), *([box] * lattice.points))
        if lattice.square(candidate := DivClass(coordinates)) == -1
        and lattice.dot(lattice.canonical, candidate) == -1
    }


@pytest.mark.parametrize(
    argnames=("points", "expected"),
    argvalues=[
        (1, 1),
        (2, 3),
        (3, 6),
        (4, 10),
        (5, 16),
        (6, 27),
        (7, 56),
        (8, 240),
    ],
)
def test_exceptional_counts(
    picard: PicardService,
    points: int,
    expected: int,
) -> None:
    """Test the number of exceptional classes on Del Pezzo blow-ups.

    Args:
        picard (PicardService): service.
        points (int): n.
        expected (int): count.

    """
    lattice: PicLattice = picard.make_lattice(points)

    found: list[DivClass] = picard.exceptional_classes(lattice)

    assert len(found) == expected
    assert len(set(found)) == expected
    assert found[0] == DivClass.basis(points + 1, 1)
    assert all(
        lattice.square(divisor) == -1
        and lattice.dot(lattice.canonical, divisor) == -1
        for divisor in found
    )


@pytest.mark.parametrize(argnames="points", argvalues=[1, 4, 6, 7])
def test_degree_bound_is_closed(picard: PicardService, points: int) -> None:
    """Test widening the degree range finds nothing new.

    Args:
        picard (PicardService): service.
        points (int): n.

    """
    lattice: PicLattice = picard.make_lattice(points)

    assert picard.exceptional_classes(
        lattice,
        slack=1,
    ) == picard.exceptional_classes(lattice)


@pytest.mark.parametrize(argnames="points", argvalues=[1, 2, 3])
def test_exceptionals_match_brute_force(
    picard: PicardService,
    points: int,
) -> None:
    """Test the search against a naive box enumeration.

    Args:
        picard (PicardService): service.
        points (int): n.

    """
    lattice: PicLattice = picard.make_lattice(points)

    assert set(picard.exceptional_classes(lattice)) == (
        brute_force_exceptionals(lattice)
    )


def test_exceptional_strings(picard: PicardService) -> None:
    """Test the printed classes on three points."""
    lattice: PicLattice = picard.make_lattice(3)

    printed: list[str] = [
        str(divisor) for divisor in picard.exceptional_classes(lattice)
    ]

    assert printed == [
        "E1",
        "E2",
        "E3",
        "H - E2 - E3",
        "H - E1 - E3",
        "H - E1 - E2",
    ]


def test_out_of_scope(picard: PicardService) -> None:
    """Test negative point counts and non Del Pezzo enumerations."""
    with pytest.raises(LatticeOutOfScopeError):
        picard.make_lattice(-1)

    with pytest.raises(LatticeOutOfScopeError) as error:
        picard.exceptional_classes(picard.make_lattice(9))

    assert error.value.reason == "out-of-scope"

    with pytest.raises(LatticeOutOfScopeError):
        picard.anti_reflection_in_k(picard.make_lattice(6))


@pytest.mark.parametrize(
    argnames=("points", "label"),
    argvalues=[
        (7, PairLabel.del_pezzo_degree_2),
        (8, PairLabel.del_pezzo_degree_1),
    ],
)
def test_anti_reflection(
    picard: PicardService,
    points: int,
    label: PairLabel,
) -> None:
    """Test the minimal Geiser and Bertini lattice actions.

    Args:
        picard (PicardService): service.
        points (int): n.
        label (PairLabel): expected case.

    """
    involution: LatticeInvolution = picard.anti_reflection_in_k(
        picard.make_lattice(points),
    )
    involution.validate()

    pair: PairClassification = picard.classify_pair(involution)

    assert picard.fixed_rank(involution) == 1
    assert pair.minimality.minimal
    assert pair.minimality.witness is None
    assert pair.label is label
    assert pair.fixed_rank == 1


def test_identity_on_one_point(picard: PicardService) -> None:
    """Test the fixed exceptional curve witnesses non-minimality."""
    lattice: PicLattice = picard.make_lattice(1)

    result: MinimalityResult = picard.is_minimal(
        LatticeInvolution.identity(lattice),
    )

    assert not result.minimal
    assert result.witness == DivClass((0, 1))
    assert result.failure is MinimalityFailure.fixed
    assert picard.classify_pair(
        LatticeInvolution.identity(lattice),
    ).label is PairLabel.non_minimal


def test_dj_quadratic_involution(picard: PicardService) -> None:
    """Test E1 is disjoint from its image H - E2 - E3."""
    involution: LatticeInvolution = picard.dj_quadratic_involution()
    involution.validate()
    expected_rank: int = 2

    result: MinimalityResult = picard.is_minimal(involution)

    assert not result.minimal
    assert str(result.witness) == "E1"
    assert str(result.image) == "H - E2 - E3"
    assert result.failure is MinimalityFailure.disjoint
    assert result.intersection == 0
    assert picard.fixed_rank(involution) == expected_rank
    assert picard.classify_pair(involution).label is PairLabel.non_minimal


def test_quadric_swap(picard: PicardService) -> None:
    """Test exchanging the rulings is the quadric case."""
    lattice: PicLattice = picard.make_quadric_lattice()

    pair: PairClassification = picard.classify_pair(
        picard.quadric_swap(lattice),
    )

    assert pair.label is PairLabel.quadric
    assert pair.fixed_rank == 1
    assert picard.exceptional_classes(lattice) == []


def test_quadric_identity(picard: PicardService) -> None:
    """Test the identity on the quadric keeps both rulings."""
    lattice: PicLattice = picard.make_quadric_lattice()
    expected_rank: int = 2

    pair: PairClassification = picard.classify_pair(
        LatticeInvolution.identity(lattice),
    )

    assert pair.label is PairLabel.fibration
    assert pair.fixed_rank == expected_rank
    assert pair.stable_pencils == (DivClass((0, 1)), DivClass((1, 0)))


def test_plane_identity(picard: PicardService) -> None:
    """Test the plane with no blown up points."""
    lattice: PicLattice = picard.make_lattice(0)

    pair: PairClassification = picard.classify_pair(
        LatticeInvolution.identity(lattice),
    )

    assert picard.exceptional_classes(lattice) == []
    assert pair.label is PairLabel.plane
    assert str(pair.label) == "(iii)"


@pytest.mark.parametrize(
    argnames=("root", "square"),
    argvalues=[
        (DivClass((1, 0, 0)), 1),
        (DivClass((2, 1, 1)), 2),
    ],
)
def test_reflection(
    picard: PicardService,
    root: DivClass,
    square: int,
) -> None:
    """Test reflections are involutive isometries negating the root.

    Args:
        picard (PicardService): service.
        root (DivClass): root.
        square (int): its self-intersection.

    """
    lattice: PicLattice = picard.make_lattice(2)

    reflection: LatticeInvolution = picard.reflection_through(lattice, root)

    assert lattice.square(root) == square
    assert reflection.apply(root) == -root
    assert reflection.is_isometry()
    assert reflection.is_involutive()
    assert not reflection.fixes_canonical()

    with pytest.raises(InvalidLatticeInvolutionError):
        picard.classify_pair(reflection)


def test_invalid_root(picard: PicardService) -> None:
    """Test an exceptional class cannot be a reflection root."""
    with pytest.raises(ReflectionRootError) as error:
        picard.reflection_through(picard.make_lattice(2), DivClass((0, 1, 0)))

    assert error.value.reason == "invalid-root"


def test_relabelling(picard: PicardService) -> None:
    """Test relabelling the points keeps the action and its class."""
    involution: LatticeInvolution = picard.dj_quadratic_involution()
    anti: LatticeInvolution = picard.anti_reflection_in_k(
        picard.make_lattice(7),
    )

    assert involution.permuted([0, 2, 1]) == involution
    assert anti.permuted([6, 5, 4, 3, 2, 1, 0]) == anti
    assert picard.classify_pair(
        involution.permuted([1, 0, 2]),
    ).label is PairLabel.non_minimal


def test_invalid_matrix() -> None:
    """Test a non involutive matrix is rejected."""
    lattice: PicLattice = PicLattice.blow_up(1)
    involution: LatticeInvolution = LatticeInvolution.from_images(
        lattice,
        [DivClass((1, 1)), DivClass((0, 1))],
    )

    with pytest.raises(InvalidLatticeInvolutionError):
        involution.validate()
