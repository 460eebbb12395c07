"""Settings."""

import logging
from pathlib import Path


class Settings:
    """Settings."""

    default_seed: int = 0

    retry_limit: int = 12
    frame_range: int = 3
    sample_range: int = 9

    geiser_samples: int = 20
    bertini_samples: int = 5
    interpolation_samples: int = 100

    symbolic_degree_limit: int = 6
    pointwise_samples: int = 20

    log_level: int = logging.WARNING
    log_format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    schema_path: Path = (
        Path(__file__).resolve().parent.parent
        / "presentation"
        / "schemas"
        / "command_output.schema.json"
    )


settings: Settings = Settings()
