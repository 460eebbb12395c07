"""Classification result value object."""

from dataclasses import dataclass

from src.domain.value_objects.fixed_curve_invariant import FixedCurveInvariant
from src.domain.value_objects.involution_kind import InvolutionKind
from src.domain.value_objects.proj_point import ProjPoint


@dataclass(frozen=True, slots=True)
class ClassificationResult:
    """Label of an involution with provenance.

    Results for raw maps are never certified: rational fixed components
    cannot be excluded without construction metadata.
    """

    kind: InvolutionKind
    invariant: FixedCurveInvariant
    certified: bool
    center: ProjPoint | None = None
    notes: tuple[str, ...] = ()
