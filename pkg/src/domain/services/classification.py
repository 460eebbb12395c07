"""Involution classification domain service."""

import logging

from sympy import Rational

from src.domain.aggregates.involution_record import InvolutionRecord
from src.domain.entities.rational_map import RationalMap
from src.domain.exceptions.fixed_curve import (
    IdentityMapError,
    NotInvolutiveError,
    UnrecognizedInvolutionError,
)
from src.domain.exceptions.projective import ZeroPointError
from src.domain.interfaces.random_source import IRandomSource
from src.domain.services.fixed_curve import (
    GEISER_SEXTIC_DEGREE,
    FixedCurveService,
)
from src.domain.services.projective_geometry import ProjectiveGeometryService
from src.domain.services.rational_maps import RationalMapService
from src.domain.value_objects.classification_result import (
    ClassificationResult,
)
from src.domain.value_objects.fixed_curve_invariant import FixedCurveInvariant
from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.involution_kind import (
    BERTINI_DEGREE,
    GEISER_DEGREE,
    InvolutionKind,
)
from src.domain.value_objects.proj_point import ProjPoint

logger: logging.Logger = logging.getLogger(__name__)

UNCERTIFIED_NOTE: str = (
    "raw map: rational fixed components cannot be excluded"
)
MINIMUM_LINES: int = 3


class ClassificationService:
    """Labels DJ(d), Geiser and Bertini from records or raw maps."""

    def __init__(  # noqa: PLR0913
        self,
        maps: RationalMapService | None = None,
        fixed_curves: FixedCurveService | None = None,
        geometry: ProjectiveGeometryService | None = None,
        symbolic_degree_limit: int = 6,
        sample_count: int = 20,
        coordinate_range: int = 9,
    ) -> None:
        """Create new instance.

        Args:
            maps (RationalMapService | None, optional): map operations.
                Defaults to None.
            fixed_curves (FixedCurveService | None, optional): fixed loci.
                Defaults to None.
            geometry (ProjectiveGeometryService | None, optional): lines.
                Defaults to None.
            symbolic_degree_limit (int, optional): largest degree checked
                symbolically for involutivity. Defaults to 6.
            sample_count (int, optional): sample points for pointwise checks
                and center detection. Defaults to 20.
            coordinate_range (int, optional): sample coordinate bound.
                Defaults to 9.

        """
        self._maps: RationalMapService = maps or RationalMapService()
        self._fixed_curves: FixedCurveService = (
            fixed_curves or FixedCurveService()
        )
        self._geometry: ProjectiveGeometryService = (
            geometry or ProjectiveGeometryService()
        )
        self._symbolic_degree_limit: int = symbolic_degree_limit
        self._sample_count: int = sample_count
        self._coordinate_range: int = coordinate_range

    def classify_record(
        self,
        record: InvolutionRecord,
    ) -> ClassificationResult:
        """Classify a constructed involution from its metadata.

        Args:
            record (InvolutionRecord): record.

        Returns:
            ClassificationResult: certified label.

        """
        return ClassificationResult(
            kind=record.kind,
            invariant=self._fixed_curves.invariant_of(record),
            certified=True,
            center=record.center,
        )

    def classify_map(
        self,
        sigma: RationalMap,
        random: IRandomSource,
    ) -> ClassificationResult:
        """Classify a raw map by degree and fixed locus profile.

        Args:
            sigma (RationalMap): map.
            random (IRandomSource): source of sample points.

        Raises:
            IdentityMapError: if the map is the identity.
            NotInvolutiveError: if the map is not an involution.
            UnrecognizedInvolutionError: if no profile matches.

        Returns:
            ClassificationResult: uncertified label.

        """
        if self._maps.is_identity(sigma):
            msg: str = "The identity is not a birational involution."
            raise IdentityMapError(msg)

        self.verify_involution(sigma, random)

        degree: int = sigma.degree
        fixed: HPoly = self._fixed_curves.fixed_locus(sigma)
        center: ProjPoint | None = self.find_dj_center(sigma, random)

        if center is not None and self._has_dj_profile(sigma, fixed, center):
            kind: InvolutionKind = InvolutionKind.de_jonquieres(degree)
        elif degree == GEISER_DEGREE and fixed.degree == GEISER_SEXTIC_DEGREE:
            kind = InvolutionKind.geiser()
            center = None
        elif degree == BERTINI_DEGREE:
            kind = InvolutionKind.bertini()
            center = None
        else:
            msg = (
                f"Degree {degree} involution with fixed locus of degree "
                f"{fixed.degree}; supply construction metadata."
            )
            raise UnrecognizedInvolutionError(msg)

        logger.warning("Classified raw map as %s without certificate", kind)

        return ClassificationResult(
            kind=kind,
            invariant=FixedCurveInvariant.expected_for(kind),
            certified=False,
            center=center,
            notes=(UNCERTIFIED_NOTE,),
        )

    def verify_involution(
        self,
        sigma: RationalMap,
        random: IRandomSource,
    ) -> None:
        """Check involutivity, symbolically up to the degree limit.

        Args:
            sigma (RationalMap): map.
            random (IRandomSource): source of sample points.

        Raises:
            NotInvolutiveError: if the check fails.

        """
        if sigma.degree <= self._symbolic_degree_limit:
            involutive: bool = self._maps.is_involution(sigma)
        else:
            involutive = self._maps.is_involution_pointwise(
                sigma,
                self._samples(random),
            )

        if not involutive:
            msg: str = f"{sigma} composed with itself is not the identity."
            raise NotInvolutiveError(msg)

    def find_dj_center(
        self,
        sigma: RationalMap,
        random: IRandomSource,
    ) -> ProjPoint | None:
        """Find the common point of the lines joining x and sigma(x).

        Args:
            sigma (RationalMap): involution.
            random (IRandomSource): source of sample points.

        Returns:
            ProjPoint | None: center, None if the lines do not concur.

        """
        lines: list[HPoly] = []

        for point in self._samples(random):
            image: ProjPoint | None = sigma.evaluate(point)

            if image is None or image == point:
                continue

            line: HPoly = self._geometry.line_through(point, image)

            if line not in lines:
                lines.append(line)

        if len(lines) < MINIMUM_LINES:
            return None

        try:
            center: ProjPoint = self._geometry.meet(lines[0], lines[1])
        except ZeroPointError:
            return None

        if all(line.evaluate(center.rationals) == 0 for line in lines):
            return center

        return None

    def _has_dj_profile(
        self,
        sigma: RationalMap,
        fixed: HPoly,
        center: ProjPoint,
    ) -> bool:
        degree: int = sigma.degree
        values: tuple[Rational, Rational, Rational] = center.rationals

        base_multiplicity: int = min(
            component.multiplicity_at(values)
            for component in sigma.components
            if not component.is_zero
        )

        return (
            base_multiplicity == degree - 1
            and fixed.degree == degree
            and fixed.multiplicity_at(values) == degree - 2
        )

    def _samples(self, random: IRandomSource) -> list[ProjPoint]:
        samples: list[ProjPoint] = []

        while len(samples) < self._sample_count:
            values: list[int] = [
                random.integer(-self._coordinate_range, self._coordinate_range)
                for _ in range(3)
            ]

            if any(values):
                samples.append(ProjPoint.of(values))

        return samples
