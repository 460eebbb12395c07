"""Phase timer."""

import logging
import time
from collections.abc import Iterator
from contextlib import contextmanager

logger: logging.Logger = logging.getLogger(__name__)


class PhaseTimer:
    """Wall-clock seconds per named phase."""

    def __init__(self) -> None:
        """Create new instance."""
        self.timings: dict[str, float] = {}

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        """Time a block.

        Args:
            name (str): phase name; repeated phases accumulate.

        Yields:
            None: control to the timed block.

        """
        start: float = time.perf_counter()

        try:
            yield
        finally:
            elapsed: float = time.perf_counter() - start
            self.timings[name] = self.timings.get(name, 0.0) + elapsed
            logger.info("Phase %s took %.3f s", name, elapsed)
