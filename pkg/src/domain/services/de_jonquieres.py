"""De Jonquieres involution domain service."""

import logging
from itertools import pairwise

from sympy import ImmutableMatrix, Matrix

from src.domain.aggregates.involution_record import InvolutionRecord
from src.domain.entities.rational_map import RationalMap
from src.domain.exceptions.base import DomainValidationError
from src.domain.exceptions.involutions import InvalidCurveError
from src.domain.interfaces.random_source import IRandomSource
from src.domain.services.exact_algebra import ExactAlgebraService
from src.domain.services.projective_geometry import ProjectiveGeometryService
from src.domain.value_objects.binary_form import BForm
from src.domain.value_objects.dj_data import DJData, DJValidationReport
from src.domain.value_objects.fixed_curve_invariant import FixedCurveInvariant
from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.involution_kind import InvolutionKind
from src.domain.value_objects.proj_point import ProjPoint

logger: logging.Logger = logging.getLogger(__name__)

CLEAN_PROJECTIONS: int = 2
MIN_DEGREE: int = 2
RESIDUAL_DEGREE: int = 2


class DeJonquieresService:
    """Normal form, validation and closed form of De Jonquieres maps.

    In the frame where the center is (0:1:0) and ``C = A*y^2 + B*y + Cd``
    the involution is ``(x*(2Ay + B) : -(By + 2Cd) : z*(2Ay + B))``.
    """

    def __init__(
        self,
        algebra: ExactAlgebraService | None = None,
        geometry: ProjectiveGeometryService | None = None,
        retry_limit: int = 12,
        coordinate_range: int = 3,
    ) -> None:
        """Create new instance.

        Args:
            algebra (ExactAlgebraService | None, optional): exact algebra.
                Defaults to None.
            geometry (ProjectiveGeometryService | None, optional): frames.
                Defaults to None.
            retry_limit (int, optional): projections tried by the
                singularity test and attempts of the sampler.
                Defaults to 12.
            coordinate_range (int, optional): entry bound of random frames.
                Defaults to 3.

        """
        self._algebra: ExactAlgebraService = algebra or ExactAlgebraService()
        self._geometry: ProjectiveGeometryService = (
            geometry or ProjectiveGeometryService()
        )
        self._retry_limit: int = retry_limit
        self._coordinate_range: int = coordinate_range

    def normal_form(
        self,
        curve: HPoly,
        center: ProjPoint,
        random: IRandomSource,
        *,
        trusted: bool = False,
    ) -> DJData:
        """Move the center to (0:1:0) and validate the curve.

        Args:
            curve (HPoly): curve C of degree d >= 2.
            center (ProjPoint): center p.
            random (IRandomSource): source of projection centers.
            trusted (bool, optional): skip the singularity test away from
                the center. Defaults to False.

        Raises:
            InvalidCurveError: if C has the wrong multiplicity at p, a
                non-ordinary point there, a line through p, a degenerate
                discriminant or another singular point.

        Returns:
            DJData: validated normal form.

        """
        degree: int = curve.degree

        if degree < MIN_DEGREE:
            msg: str = f"Curve {curve} has degree {degree} < 2."
            raise InvalidCurveError(msg, reason="degree-too-small")

        frame: ImmutableMatrix = self._geometry.frame_to_center(center)
        normal: HPoly = curve.linear_substitute(frame)
        quadratic: HPoly = normal.coefficient_in(1, 2)

        if normal.max_exponent(1) != RESIDUAL_DEGREE or quadratic.is_zero:
            msg = (
                f"Curve {curve} does not have multiplicity {degree - 2} "
                f"at {center}."
            )
            raise InvalidCurveError(msg, reason="multiplicity-mismatch")

        linear: HPoly = normal.coefficient_in(1, 1)
        constant: HPoly = normal.coefficient_in(1, 0)
        self._check_pencil(quadratic, linear, constant, curve, center)

        projections: int = 0

        if not trusted:
            projections = self.singular_points_elsewhere(curve, center, random)

        return DJData(
            degree=degree,
            quadratic=quadratic,
            linear=linear,
            constant=constant,
            frame=frame,
            frame_inverse=ImmutableMatrix(frame.inv()),
            center=center,
            report=DJValidationReport(
                trusted=trusted,
                smooth_elsewhere_certified=not trusted,
                projections=projections,
            ),
        )

    def involution(self, data: DJData) -> RationalMap:
        """Get the closed form of the involution in user coordinates.

        Args:
            data (DJData): validated normal form.

        Returns:
            RationalMap: involution of degree d.

        """
        x_form, y_form, z_form = (HPoly.variable(index) for index in range(3))
        tangent: HPoly = data.quadratic.scale(2) * y_form + data.linear
        normal_components: list[HPoly] = [
            x_form * tangent,
            -(data.linear * y_form + data.constant.scale(2)),
            z_form * tangent,
        ]
        pulled: list[HPoly] = [
            component.linear_substitute(data.frame_inverse)
            for component in normal_components
        ]

        return RationalMap(
            [
                self._mix(data.frame, row, pulled)
                for row in range(3)
            ],
        )

    def dj_involution(
        self,
        curve: HPoly,
        center: ProjPoint,
        random: IRandomSource,
        *,
        trusted: bool = False,
    ) -> InvolutionRecord:
        """Build the De Jonquieres involution of a curve and a center.

        Args:
            curve (HPoly): curve with an ordinary (d-2)-fold point at p.
            center (ProjPoint): center p.
            random (IRandomSource): random source.
            trusted (bool, optional): skip the singularity test.
                Defaults to False.

        Returns:
            InvolutionRecord: record with closed form and fixed curve.

        """
        data: DJData = self.normal_form(curve, center, random, trusted=trusted)
        rational_map: RationalMap = self.involution(data)
        kind: InvolutionKind = InvolutionKind.de_jonquieres(data.degree)
        logger.info("Built %s centered at %s", kind, center)

        return InvolutionRecord(
            kind=kind,
            evaluator=rational_map.evaluate,
            invariant=FixedCurveInvariant.expected_for(kind),
            seed=random.seed,
            rational_map=rational_map,
            fixed_curve=curve.canonical(),
            dj_data=data,
        )

    def dj_from_conic(
        self,
        conic: HPoly,
        center: ProjPoint,
        random: IRandomSource,
    ) -> InvolutionRecord:
        """Build the quadratic involution of a smooth conic.

        Args:
            conic (HPoly): smooth conic Q.
            center (ProjPoint): point p off Q.
            random (IRandomSource): random source.

        Raises:
            InvalidCurveError: if Q is not a smooth conic or p lies on Q.

        Returns:
            InvolutionRecord: DJ(2) record.

        """
        if conic.degree != RESIDUAL_DEGREE:
            msg: str = f"{conic} is not a conic."
            raise InvalidCurveError(msg, reason="not-a-conic")

        hessian: Matrix = Matrix(
            3,
            3,
            lambda row, column: conic.diff(row).diff(column).evaluate(
                (0, 0, 0),
            ),
        )

        if hessian.det() == 0:
            msg = f"Conic {conic} is singular."
            raise InvalidCurveError(msg, reason="singular-conic")

        if conic.evaluate(center.rationals) == 0:
            msg = f"Center {center} lies on the conic {conic}."
            raise InvalidCurveError(msg, reason="center-on-conic")

        return self.dj_involution(conic, center, random, trusted=True)

    def singular_points_elsewhere(
        self,
        curve: HPoly,
        center: ProjPoint,
        random: IRandomSource,
    ) -> int:
        """Certify that the curve is smooth away from the center.

        Singular points are common zeros of the partials. Their projections
        from a random point are common roots of the resultants of pairs of
        partials; a projection whose common roots all come from the
        center is clean, and two clean projections from distinct points
        certify smoothness.

        Args:
            curve (HPoly): curve.
            center (ProjPoint): the only singular point allowed.
            random (IRandomSource): source of projection frames.

        Raises:
            InvalidCurveError: if the partials share a factor or no two
                clean projections are found within the retry limit.

        Returns:
            int: projections tried.

        """
        partials: tuple[HPoly, ...] = curve.gradient()

        if self._algebra.gcd_all(partials).degree > 0:
            msg: str = f"Curve {curve} has a multiple component."
            raise InvalidCurveError(msg, reason="singular-elsewhere")

        clean: set[ProjPoint] = set()

        for attempt in range(1, self._retry_limit + 1):
            frame: ImmutableMatrix = self._geometry.random_frame(
                random,
                self._coordinate_range,
            )
            projection: ProjPoint = self._geometry.transform_point(
                frame,
                ProjPoint((0, 1, 0)),
            )

            if projection in clean or self._is_clean(
                partials,
                frame,
                center,
            ):
                clean.add(projection)

            if len(clean) >= CLEAN_PROJECTIONS:
                logger.debug("Smoothness certified after %d tries", attempt)
                return attempt

        msg = (
            f"Curve {curve} appears singular away from {center} after "
            f"{self._retry_limit} projections."
        )
        raise InvalidCurveError(msg, reason="singular-elsewhere")

    def sample_curve(
        self,
        degree: int,
        random: IRandomSource,
        coefficient_range: int = 2,
    ) -> tuple[HPoly, ProjPoint]:
        """Draw a curve and center passing validation.

        The curve is drawn in normal form and moved by a random frame.

        Args:
            degree (int): degree d >= 2.
            random (IRandomSource): random source.
            coefficient_range (int, optional): coefficient bound.
                Defaults to 2.

        Raises:
            InvalidCurveError: if no valid curve is drawn within the
                retry limit.

        Returns:
            tuple[HPoly, ProjPoint]: curve and center.

        """
        for attempt in range(1, self._retry_limit + 1):
            normal: HPoly = self._random_normal_curve(
                degree,
                random,
                coefficient_range,
            )
            center: ProjPoint = self._random_point(random)
            frame: ImmutableMatrix = self._geometry.random_frame(
                random,
                self._coordinate_range,
                center=center,
            )
            curve: HPoly = normal.linear_substitute(
                ImmutableMatrix(frame.inv()),
            ).canonical()

            try:
                self.normal_form(curve, center, random, trusted=True)
            except DomainValidationError as error:
                logger.debug("Sample %d rejected: %s", attempt, error)
                continue

            return (curve, center)

        msg: str = f"No valid degree {degree} curve drawn."
        raise InvalidCurveError(msg, reason="sampling-failed")

    def discriminant(self, data: DJData) -> BForm:
        """Get the discriminant of the residual quadratic.

        Args:
            data (DJData): normal form.

        Returns:
            BForm: ``B^2 - 4*A*Cd`` in the line parameters.

        """
        return self._algebra.bform_discriminant(
            BForm.from_hpoly(data.quadratic),
            BForm.from_hpoly(data.linear),
            BForm.from_hpoly(data.constant),
        )

    def _check_pencil(
        self,
        quadratic: HPoly,
        linear: HPoly,
        constant: HPoly,
        curve: HPoly,
        center: ProjPoint,
    ) -> None:
        binary: list[BForm] = [
            BForm.from_hpoly(form) for form in (quadratic, linear, constant)
        ]

        if not self._algebra.is_squarefree(binary[0]):
            msg: str = f"Tangent cone of {curve} at {center} is not ordinary."
            raise InvalidCurveError(msg, reason="non-ordinary")

        if self._algebra.gcd_all(binary).degree > 0:
            msg = f"Curve {curve} contains a line through {center}."
            raise InvalidCurveError(msg, reason="line-through-center")

        discriminant: BForm = self._algebra.bform_discriminant(*binary)

        if discriminant.is_zero or not self._algebra.is_squarefree(
            discriminant,
        ):
            msg = f"Discriminant {discriminant} is not squarefree."
            raise InvalidCurveError(msg, reason="degenerate-discriminant")

    def _is_clean(
        self,
        partials: tuple[HPoly, ...],
        frame: ImmutableMatrix,
        center: ProjPoint,
    ) -> bool:
        moved: list[HPoly] = [
            partial.linear_substitute(frame) for partial in partials
        ]

        if any(form.max_exponent(1) != form.degree for form in moved):
            return False

        eliminants: list[BForm] = [
            self._algebra.eliminate_y(first, second)
            for first, second in pairwise(moved)
        ]

        if any(form.is_zero for form in eliminants):
            return False

        common: BForm = self._algebra.gcd_all(eliminants)
        moved_center: ProjPoint = self._geometry.transform_point(
            ImmutableMatrix(frame.inv()),
            center,
        )
        first, _, last = moved_center.coordinates

        if first == 0 and last == 0:
            return False

        center_factor: BForm = BForm.linear_through(first, last)

        while common.degree > 0 and self._divides(center_factor, common):
            common = self._algebra.exact_divide(common, center_factor)

        return common.degree == 0

    def _divides(self, divisor: BForm, dividend: BForm) -> bool:
        _, remainder = dividend.poly.div(divisor.poly)
        return bool(remainder.is_zero)

    def _mix(
        self,
        frame: ImmutableMatrix,
        row: int,
        components: list[HPoly],
    ) -> HPoly:
        total: HPoly = HPoly.zero(components[0].degree)

        for column, component in enumerate(components):
            if frame[row, column] != 0:
                total += component.scale(frame[row, column])

        return total

    def _random_normal_curve(
        self,
        degree: int,
        random: IRandomSource,
        coefficient_range: int,
    ) -> HPoly:
        y_form: HPoly = HPoly.variable(1)
        parts: list[HPoly] = [
            self._random_binary(degree - power, random, coefficient_range)
            for power in (2, 1, 0)
        ]

        return parts[0] * y_form**2 + parts[1] * y_form + parts[2]

    def _random_binary(
        self,
        degree: int,
        random: IRandomSource,
        coefficient_range: int,
    ) -> HPoly:
        return HPoly.from_terms(
            degree,
            {
                (power, 0, degree - power): random.integer(
                    -coefficient_range,
                    coefficient_range,
                )
                for power in range(degree + 1)
            },
        )

    def _random_point(self, random: IRandomSource) -> ProjPoint:
        while True:
            values: list[int] = [
                random.integer(-self._coordinate_range, self._coordinate_range)
                for _ in range(3)
            ]

            if any(values):
                return ProjPoint.of(values)
