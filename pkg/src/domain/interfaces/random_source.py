"""Random source interface."""

from typing import Protocol


class IRandomSource(Protocol):
    """Deterministic pseudo-random stream."""

    @property
    def seed(self) -> int:
        """Get the seed the stream started from.

        Returns:
            int: unsigned 64-bit seed.

        """
        ...

    def next_u64(self) -> int:
        """Get next raw output.

        Returns:
            int: unsigned 64-bit integer.

        """
        ...

    def integer(self, low: int, high: int) -> int:
        """Draw a uniform integer.

        Args:
            low (int): smallest value.
            high (int): largest value, inclusive.

        Returns:
            int: value in ``[low, high]``.

        """
        ...


class IRandomSourceFactory(Protocol):
    """Opens a random stream for a seed."""

    def __call__(self, seed: int) -> IRandomSource:
        """Open a stream.

        Args:
            seed (int): unsigned 64-bit seed.

        Returns:
            IRandomSource: stream starting from the seed.

        """
        ...
