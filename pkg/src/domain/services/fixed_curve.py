"""Fixed curve domain service."""

import logging
from collections.abc import Sequence

from src.domain.aggregates.involution_record import InvolutionRecord
from src.domain.entities.rational_map import RationalMap
from src.domain.exceptions.fixed_curve import (
    IdentityMapError,
    InvalidMultiplicityError,
    InvariantMismatchError,
    NegativeGenusError,
)
from src.domain.exceptions.involutions import InvalidCurveError
from src.domain.services.exact_algebra import ExactAlgebraService
from src.domain.value_objects.binary_form import BForm
from src.domain.value_objects.dj_data import DJData
from src.domain.value_objects.fixed_curve_invariant import (
    GEISER_GENUS,
    FixedCurveInvariant,
)
from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.involution_family import InvolutionFamily
from src.domain.value_objects.point_config import PointConfig

logger: logging.Logger = logging.getLogger(__name__)

GEISER_SEXTIC_DEGREE: int = 6
BERTINI_MODEL: tuple[int, list[int]] = (9, [3] * 8)
SINGULAR_MULTIPLICITY: int = 2


class FixedCurveService:
    """Fixed loci, plane genus and conjugacy invariants."""

    def __init__(self, algebra: ExactAlgebraService | None = None) -> None:
        """Create new instance.

        Args:
            algebra (ExactAlgebraService | None, optional): exact algebra.
                Defaults to None.

        """
        self._algebra: ExactAlgebraService = algebra or ExactAlgebraService()

    def fixed_locus(self, sigma: RationalMap) -> HPoly:
        """Get the divisorial part of the fixed locus.

        Args:
            sigma (RationalMap): involution.

        Raises:
            IdentityMapError: if every fixed-point minor vanishes.

        Returns:
            HPoly: gcd of the minors, constant when no curve is fixed.

        """
        variables: list[HPoly] = [HPoly.variable(index) for index in range(3)]
        components: tuple[HPoly, HPoly, HPoly] = sigma.components
        minors: list[HPoly] = [
            variables[first] * components[second]
            - variables[second] * components[first]
            for first, second in ((0, 1), (0, 2), (1, 2))
        ]

        if all(minor.is_zero for minor in minors):
            msg: str = "The identity map fixes every point."
            raise IdentityMapError(msg)

        return self._algebra.gcd_all(minors)

    def plane_genus(self, degree: int, multiplicities: Sequence[int]) -> int:
        """Get the geometric genus of a plane curve.

        Singular points are assumed ordinary.

        Args:
            degree (int): degree d >= 1.
            multiplicities (Sequence[int]): multiplicities of the singular
                points.

        Raises:
            InvalidMultiplicityError: if a multiplicity is below two.
            NegativeGenusError: if the data give a negative genus.

        Returns:
            int: ``(d-1)(d-2)/2 - sum m(m-1)/2``.

        """
        low: list[int] = [
            multiplicity
            for multiplicity in multiplicities
            if multiplicity < SINGULAR_MULTIPLICITY
        ]

        if low:
            msg: str = f"Singular points need multiplicity >= 2, got {low}."
            raise InvalidMultiplicityError(msg)

        genus: int = (degree - 1) * (degree - 2) // 2 - sum(
            multiplicity * (multiplicity - 1) // 2
            for multiplicity in multiplicities
        )

        if degree < 1 or genus < 0:
            msg = (
                f"Degree {degree} with multiplicities {list(multiplicities)} "
                "gives no curve."
            )
            raise NegativeGenusError(msg)

        return genus

    def singular_fibre_count(self, data: DJData) -> int:
        """Count the singular fibres of the pencil of lines through p.

        Args:
            data (DJData): validated normal form.

        Raises:
            InvalidCurveError: if the discriminant is not squarefree.

        Returns:
            int: ``2d - 2``.

        """
        discriminant: BForm = self._algebra.bform_discriminant(
            BForm.from_hpoly(data.quadratic),
            BForm.from_hpoly(data.linear),
            BForm.from_hpoly(data.constant),
        )

        if discriminant.is_zero or not self._algebra.is_squarefree(
            discriminant,
        ):
            msg: str = f"Discriminant {discriminant} is not squarefree."
            raise InvalidCurveError(msg, reason="degenerate-discriminant")

        return discriminant.degree

    def invariant_of(self, record: InvolutionRecord) -> FixedCurveInvariant:
        """Get the invariant of a record, cross-checked with its data.

        Args:
            record (InvolutionRecord): constructed involution.

        Raises:
            InvariantMismatchError: if recomputed data disagree with the
                record.

        Returns:
            FixedCurveInvariant: invariant.

        """
        expected: FixedCurveInvariant = FixedCurveInvariant.expected_for(
            record.kind,
        )
        genus: int | None = self._recomputed_genus(record)

        if record.invariant != expected or (
            genus is not None and genus != expected.genus
        ):
            msg: str = (
                f"Record {record.kind} carries {record.invariant}, "
                f"data give genus {genus}."
            )
            raise InvariantMismatchError(msg)

        return expected

    def _recomputed_genus(self, record: InvolutionRecord) -> int | None:
        family: InvolutionFamily = record.kind.family

        if family is InvolutionFamily.de_jonquieres:
            return self._de_jonquieres_genus(record)

        if family is InvolutionFamily.geiser:
            return self._geiser_genus(record)

        if family is InvolutionFamily.bertini:
            return self.plane_genus(*BERTINI_MODEL)

        return None

    def _de_jonquieres_genus(self, record: InvolutionRecord) -> int | None:
        curve: HPoly | None = record.fixed_curve

        if curve is None or record.center is None:
            return None

        degree: int = record.kind.degree

        if record.rational_map is not None and not self.fixed_locus(
            record.rational_map,
        ).is_proportional(curve):
            msg: str = f"Fixed locus of {record.rational_map} is not {curve}."
            raise InvariantMismatchError(msg)

        multiplicity: int = curve.multiplicity_at(record.center.rationals)

        if curve.degree != degree or multiplicity != degree - 2:
            msg = (
                f"{curve} has degree {curve.degree} and multiplicity "
                f"{multiplicity} at {record.center}."
            )
            raise InvariantMismatchError(msg)

        singular: list[int] = [multiplicity] if multiplicity > 1 else []

        return self.plane_genus(degree, singular)

    def _geiser_genus(self, record: InvolutionRecord) -> int:
        curve: HPoly | None = record.fixed_curve
        config: PointConfig | None = record.config

        if curve is None or config is None:
            return GEISER_GENUS

        multiplicities: list[int] = [
            curve.multiplicity_at(point.rationals) for point in config.points
        ]

        if curve.degree != GEISER_SEXTIC_DEGREE or any(
            multiplicity != SINGULAR_MULTIPLICITY
            for multiplicity in multiplicities
        ):
            msg: str = (
                f"Jacobian curve of degree {curve.degree} has multiplicities "
                f"{multiplicities} at the points."
            )
            raise InvariantMismatchError(msg)

        return self.plane_genus(curve.degree, multiplicities)
