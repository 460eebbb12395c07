"""Tests for SplitMix64 random source."""

import pytest

from src.infrastructure.random.splitmix import SplitMix64


def test_reference_outputs() -> None:
    """Test the first outputs for seed 0."""
    random: SplitMix64 = SplitMix64(0)

    outputs: list[int] = [random.next_u64() for _ in range(3)]

    assert outputs == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_same_seed_same_stream() -> None:
    """Test two sources with one seed agree."""
    seed: int = 2024
    first: SplitMix64 = SplitMix64(seed)
    second: SplitMix64 = SplitMix64(seed)

    assert [first.integer(-9, 9) for _ in range(50)] == [
        second.integer(-9, 9) for _ in range(50)
    ]
    assert first.seed == seed


@pytest.mark.parametrize(
    argnames=("low", "high"),
    argvalues=[
        (0, 0),
        (-3, 3),
        (1, 100),
        (-(2**70), 2**70),
    ],
)
def test_integer_range(low: int, high: int) -> None:
    """Test draws stay inside the closed range.

    Args:
        low (int): smallest value.
        high (int): largest value.

    """
    random: SplitMix64 = SplitMix64(7)

    assert all(low <= random.integer(low, high) <= high for _ in range(200))


def test_integer_wider_than_one_word() -> None:
    """Test ranges beyond 2^64 draw from several outputs."""
    bound: int = 2**70
    word: int = 2**64
    first: SplitMix64 = SplitMix64(11)
    second: SplitMix64 = SplitMix64(11)

    draws: list[int] = [first.integer(-bound, bound) for _ in range(50)]

    assert any(abs(draw) >= word for draw in draws)
    assert draws == [second.integer(-bound, bound) for _ in range(50)]


def test_integer_covers_small_range() -> None:
    """Test every value of a small range shows up."""
    random: SplitMix64 = SplitMix64(0)

    assert {random.integer(-2, 2) for _ in range(200)} == {-2, -1, 0, 1, 2}


@pytest.mark.parametrize(argnames="seed", argvalues=[-1, 2**64])
def test_invalid_seed(seed: int) -> None:
    """Test seeds outside the unsigned 64-bit range.

    Args:
        seed (int): seed.

    """
    with pytest.raises(ValueError, match="64-bit"):
        SplitMix64(seed)


def test_empty_range() -> None:
    """Test an empty range."""
    random: SplitMix64 = SplitMix64(0)

    with pytest.raises(ValueError, match="Empty range"):
        random.integer(1, 0)
