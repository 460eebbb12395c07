"""Fixed curve invariant value object."""

from dataclasses import dataclass, field
from typing import Self

from src.domain.value_objects.fixed_curve_kind import FixedCurveKind
from src.domain.value_objects.involution_family import InvolutionFamily
from src.domain.value_objects.involution_kind import InvolutionKind

GEISER_GENUS: int = 3
BERTINI_GENUS: int = 4


@dataclass(frozen=True, slots=True)
class FixedCurveInvariant:
    """Conjugacy invariant of a plane involution.

    An elliptic fixed curve counts as hyperelliptic. Equality compares the
    kind and the genus, not the construction label.
    """

    kind: FixedCurveKind
    genus: int
    source: InvolutionKind = field(compare=False)

    @classmethod
    def expected_for(cls, source: InvolutionKind) -> Self:
        """Get the invariant attached to a construction type.

        Args:
            source (InvolutionKind): construction label.

        Returns:
            Self: invariant.

        """
        if source.family is InvolutionFamily.geiser:
            return cls(
                FixedCurveKind.non_hyperelliptic_genus_3,
                GEISER_GENUS,
                source,
            )

        if source.family is InvolutionFamily.bertini:
            return cls(
                FixedCurveKind.non_hyperelliptic_genus_4,
                BERTINI_GENUS,
                source,
            )

        genus: int = source.degree - 2

        if genus == 0:
            return cls(FixedCurveKind.empty, 0, source)

        return cls(FixedCurveKind.hyperelliptic, genus, source)

    @property
    def label(self) -> str:
        """Get printable label.

        Returns:
            str: e.g. ``empty`` or ``hyperelliptic(3)``.

        """
        if self.kind is FixedCurveKind.hyperelliptic:
            return f"{self.kind}({self.genus})"

        return str(self.kind)

    def __str__(self) -> str:
        """Format as label."""
        return self.label
