"""Pytest configuration."""

import json
from pathlib import Path
from typing import Any

import pytest
from jsonschema import Draft202012Validator

from src.domain.interfaces.random_source import IRandomSource
from src.domain.services.bertini import BertiniService
from src.domain.services.classification import ClassificationService
from src.domain.services.conic_bundle import ConicBundleService
from src.domain.services.de_jonquieres import DeJonquieresService
from src.domain.services.exact_algebra import ExactAlgebraService
from src.domain.services.fixed_curve import FixedCurveService
from src.domain.services.geiser import GeiserService
from src.domain.services.linear_systems import LinearSystemService
from src.domain.services.picard import PicardService
from src.domain.services.projective_geometry import ProjectiveGeometryService
from src.domain.services.rational_maps import RationalMapService
from src.domain.value_objects.point_config import PointConfig
from src.infrastructure.random.splitmix import SplitMix64
from src.infrastructure.settings import settings
from tests.utils.configurations import BERTINI_POINTS, GEISER_POINTS


@pytest.fixture
def random() -> IRandomSource:
    """Seeded random source fixture."""
    return SplitMix64(settings.default_seed)


@pytest.fixture
def algebra() -> ExactAlgebraService:
    """Exact algebra service fixture."""
    return ExactAlgebraService()


@pytest.fixture
def geometry() -> ProjectiveGeometryService:
    """Projective geometry service fixture."""
    return ProjectiveGeometryService()


@pytest.fixture
def maps() -> RationalMapService:
    """Rational map service fixture."""
    return RationalMapService()


@pytest.fixture
def de_jonquieres() -> DeJonquieresService:
    """De Jonquieres service fixture."""
    return DeJonquieresService()


@pytest.fixture
def systems() -> LinearSystemService:
    """Linear system service fixture."""
    return LinearSystemService()


@pytest.fixture
def fixed_curves() -> FixedCurveService:
    """Fixed curve service fixture."""
    return FixedCurveService()


@pytest.fixture
def classification() -> ClassificationService:
    """Classification service fixture."""
    return ClassificationService()


@pytest.fixture
def picard() -> PicardService:
    """Picard service fixture."""
    return PicardService()


@pytest.fixture
def conic_bundles() -> ConicBundleService:
    """Conic bundle service fixture."""
    return ConicBundleService()


@pytest.fixture(scope="session")
def geiser() -> GeiserService:
    """Geiser service fixture."""
    return GeiserService()


@pytest.fixture(scope="session")
def bertini() -> BertiniService:
    """Bertini service fixture."""
    return BertiniService()


@pytest.fixture(scope="session")
def geiser_config(geiser: GeiserService) -> PointConfig:
    """Validated seven point configuration, built once per session.

    Args:
        geiser (GeiserService): Geiser service.

    Returns:
        PointConfig: configuration with its net of cubics.

    """
    return geiser.configuration(GEISER_POINTS)


@pytest.fixture(scope="session")
def bertini_config(bertini: BertiniService) -> PointConfig:
    """Validated eight point configuration, built once per session.

    Args:
        bertini (BertiniService): Bertini service.

    Returns:
        PointConfig: configuration with its four singular sextics.

    """
    return bertini.configuration(BERTINI_POINTS)


@pytest.fixture(scope="session")
def output_validator() -> Draft202012Validator:
    """Validator of the committed command output schema."""
    schema: dict[str, Any] = json.loads(
        Path(settings.schema_path).read_text(encoding="utf-8"),
    )
    Draft202012Validator.check_schema(schema)

    return Draft202012Validator(schema)
