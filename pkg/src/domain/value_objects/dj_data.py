"""De Jonquieres normal form value object."""

from dataclasses import dataclass

from sympy import ImmutableMatrix

from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.proj_point import ProjPoint


@dataclass(frozen=True, slots=True)
class DJValidationReport:
    """Which checks a De Jonquieres curve went through."""

    trusted: bool
    smooth_elsewhere_certified: bool
    projections: int


@dataclass(frozen=True, slots=True)
class DJData:
    """Curve ``A*y^2 + B*y + Cd`` in the frame moving the center to (0:1:0).

    ``frame`` maps normal coordinates to user coordinates, so a user point
    is ``frame * normal point`` and the user curve is the normal curve
    pulled back through ``frame_inverse``.
    """

    degree: int
    quadratic: HPoly
    linear: HPoly
    constant: HPoly
    frame: ImmutableMatrix
    frame_inverse: ImmutableMatrix
    center: ProjPoint
    report: DJValidationReport

    @property
    def normal_curve(self) -> HPoly:
        """Get the curve in the normal frame.

        Returns:
            HPoly: ``A*y^2 + B*y + Cd``.

        """
        y_form: HPoly = HPoly.variable(1)
        return (
            self.quadratic * y_form**2 + self.linear * y_form + self.constant
        )

    @property
    def curve(self) -> HPoly:
        """Get the curve in user coordinates.

        Returns:
            HPoly: the curve C.

        """
        return self.normal_curve.linear_substitute(self.frame_inverse)
