"""Scripted random source mock."""

from collections.abc import Iterable


class ScriptedRandom:
    """Random source replaying a fixed list of integers.

    Every draw pops the next scripted value; ``integer`` clamps it into the
    requested range.
    """

    def __init__(self, values: Iterable[int], seed: int = 0) -> None:
        """Make new instance.

        Args:
            values (Iterable[int]): values to replay.
            seed (int, optional): reported seed. Defaults to 0.

        """
        self._values: list[int] = list(values)
        self._seed: int = seed
        self.draws: int = 0

    @property
    def seed(self) -> int:
        """Get the reported seed."""
        return self._seed

    def next_u64(self) -> int:
        """Get next scripted value.

        Raises:
            IndexError: script exhausted.

        Returns:
            int: scripted value.

        """
        if self.draws >= len(self._values):
            msg: str = f"Script exhausted after {self.draws} draws."
            raise IndexError(msg)

        value: int = self._values[self.draws]
        self.draws += 1

        return value

    def integer(self, low: int, high: int) -> int:
        """Get next scripted value clamped into ``[low, high]``."""
        return min(max(self.next_u64(), low), high)
