"""SplitMix64 random source."""

WORD_BITS: int = 64
MASK: int = (1 << WORD_BITS) - 1
GOLDEN_GAMMA: int = 0x9E3779B97F4A7C15
FIRST_MULTIPLIER: int = 0xBF58476D1CE4E5B9
SECOND_MULTIPLIER: int = 0x94D049BB133111EB


class SplitMix64:
    """SplitMix64 generator.

    State advances by the golden gamma modulo 2^64; every output is the
    state passed through the two xor-shift-multiply rounds. Uniform integers
    in a range use rejection sampling on the top bits; ranges wider than
    2^64 concatenate several outputs, most significant first. The stream is
    reproducible by any implementation of the same algorithm.
    """

    def __init__(self, seed: int = 0) -> None:
        """Create new instance.

        Args:
            seed (int, optional): unsigned 64-bit seed. Defaults to 0.

        Raises:
            ValueError: seed outside the unsigned 64-bit range.

        """
        if not 0 <= seed <= MASK:
            msg: str = f"Seed {seed} is not an unsigned 64-bit integer."
            raise ValueError(msg)

        self._seed: int = seed
        self._state: int = seed

    @property
    def seed(self) -> int:
        """Get the seed the stream started from.

        Returns:
            int: unsigned 64-bit seed.

        """
        return self._seed

    def next_u64(self) -> int:
        """Get next raw output.

        Returns:
            int: unsigned 64-bit integer.

        """
        self._state = (self._state + GOLDEN_GAMMA) & MASK
        mixed: int = self._state
        mixed = ((mixed ^ (mixed >> 30)) * FIRST_MULTIPLIER) & MASK
        mixed = ((mixed ^ (mixed >> 27)) * SECOND_MULTIPLIER) & MASK
        return mixed ^ (mixed >> 31)

    def integer(self, low: int, high: int) -> int:
        """Draw a uniform integer.

        Args:
            low (int): smallest value.
            high (int): largest value, inclusive.

        Raises:
            ValueError: empty range.

        Returns:
            int: value in ``[low, high]``.

        """
        if high < low:
            msg: str = f"Empty range [{low}, {high}]."
            raise ValueError(msg)

        span: int = high - low + 1
        bits: int = max((span - 1).bit_length(), 1)
        words: int = -(-bits // WORD_BITS)

        while True:
            candidate: int = 0

            for _ in range(words):
                candidate = (candidate << WORD_BITS) | self.next_u64()

            candidate >>= words * WORD_BITS - bits

            if candidate < span:
                return low + candidate
