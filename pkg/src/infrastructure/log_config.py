"""Logging configuration."""

import logging
import sys

from src.infrastructure.settings import settings


def configure_logging(*, verbose: bool = False) -> None:
    """Configure the root logger once, writing to stderr.

    Args:
        verbose (bool, optional): lower the level to DEBUG. Defaults to
            False.

    """
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings.log_level,
        format=settings.log_format,
        stream=sys.stderr,
        force=True,
    )
