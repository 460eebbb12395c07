"""Involution record aggregate."""

from src.domain.entities.rational_map import RationalMap
from src.domain.interfaces.evaluator import IPointEvaluator
from src.domain.value_objects.dj_data import DJData
from src.domain.value_objects.fixed_curve_invariant import FixedCurveInvariant
from src.domain.value_objects.hpoly import HPoly
from src.domain.value_objects.involution_kind import InvolutionKind
from src.domain.value_objects.point_config import PointConfig
from src.domain.value_objects.proj_point import ProjPoint


class InvolutionRecord:
    """Constructed involution with its provenance."""

    def __init__(  # noqa: PLR0913
        self,
        kind: InvolutionKind,
        evaluator: IPointEvaluator,
        invariant: FixedCurveInvariant,
        seed: int,
        rational_map: RationalMap | None = None,
        fixed_curve: HPoly | None = None,
        dj_data: DJData | None = None,
        config: PointConfig | None = None,
    ) -> None:
        """Create new instance.

        Args:
            kind (InvolutionKind): construction label.
            evaluator (IPointEvaluator): exact pointwise action.
            invariant (FixedCurveInvariant): conjugacy invariant.
            seed (int): seed of the random stream used in construction.
            rational_map (RationalMap | None, optional): closed form.
                Defaults to None.
            fixed_curve (HPoly | None, optional): plane model of the fixed
                curve. Defaults to None.
            dj_data (DJData | None, optional): De Jonquieres normal form.
                Defaults to None.
            config (PointConfig | None, optional): Geiser or Bertini
                points. Defaults to None.

        """
        self.kind: InvolutionKind = kind
        self.invariant: FixedCurveInvariant = invariant
        self.seed: int = seed
        self.rational_map: RationalMap | None = rational_map
        self.fixed_curve: HPoly | None = fixed_curve
        self.dj_data: DJData | None = dj_data
        self.config: PointConfig | None = config
        self.verified: bool = False
        self._evaluator: IPointEvaluator = evaluator

    @property
    def center(self) -> ProjPoint | None:
        """Get the De Jonquieres center.

        Returns:
            ProjPoint | None: center, None for other families.

        """
        return None if self.dj_data is None else self.dj_data.center

    def evaluate(self, point: ProjPoint) -> ProjPoint | None:
        """Apply the involution to a point.

        Args:
            point (ProjPoint): point of the plane.

        Returns:
            ProjPoint | None: image, None at a base point.

        """
        return self._evaluator(point)

    def mark_verified(self) -> None:
        """Record that involutivity was checked."""
        self.verified = True
