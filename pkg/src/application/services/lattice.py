"""Lattice application service."""

import logging
from collections.abc import Sequence

from sympy import ImmutableMatrix

from src.application.services.phase_timer import PhaseTimer
from src.domain.entities.conic_bundle_model import ConicBundleModel
from src.domain.entities.lattice_involution import LatticeInvolution
from src.domain.entities.pic_lattice import PicLattice
from src.domain.exceptions.lattice import InvalidLatticeInvolutionError
from src.domain.services.conic_bundle import ConicBundleService
from src.domain.services.picard import PicardService
from src.domain.value_objects.div_class import DivClass
from src.domain.value_objects.minimality_result import MinimalityResult
from src.domain.value_objects.pair_classification import PairClassification
from src.domain.value_objects.plane_reduction import PlaneReduction

logger: logging.Logger = logging.getLogger(__name__)


class LatticeAppService:
    """Picard lattice and conic bundle use cases."""

    def __init__(
        self,
        picard: PicardService | None = None,
        conic_bundles: ConicBundleService | None = None,
        timer: PhaseTimer | None = None,
    ) -> None:
        """Create new instance.

        Args:
            picard (PicardService | None, optional): lattice service.
            conic_bundles (ConicBundleService | None, optional): elementary
                transformations.
            timer (PhaseTimer | None, optional): phase timer.

        """
        self._picard: PicardService = picard or PicardService()
        self._conic_bundles: ConicBundleService = (
            conic_bundles or ConicBundleService()
        )
        self.timer: PhaseTimer = timer or PhaseTimer()

    def lattice(self, points: int, *, quadric: bool = False) -> PicLattice:
        """Make a blow-up lattice or the quadric lattice.

        Args:
            points (int): number of blown-up points; ignored for the quadric.
            quadric (bool, optional): use P1 x P1. Defaults to False.

        Returns:
            PicLattice: lattice.

        """
        if quadric:
            return self._picard.make_quadric_lattice()

        return self._picard.make_lattice(points)

    def identity(self, lattice: PicLattice) -> LatticeInvolution:
        """Get the identity action."""
        return LatticeInvolution.identity(lattice)

    def anti_canonical(self, lattice: PicLattice) -> LatticeInvolution:
        """Get the anti-reflection in K."""
        return self._picard.anti_reflection_in_k(lattice)

    def dj_quadratic(self) -> LatticeInvolution:
        """Get the quadratic De Jonquieres action on three points."""
        return self._picard.dj_quadratic_involution()

    def swap(self, lattice: PicLattice) -> LatticeInvolution:
        """Get the exchange of the rulings of the quadric."""
        return self._picard.quadric_swap(lattice)

    def reflection(
        self,
        lattice: PicLattice,
        root: Sequence[int],
    ) -> LatticeInvolution:
        """Get the reflection through a root.

        Args:
            lattice (PicLattice): lattice.
            root (Sequence[int]): root coordinates.

        Returns:
            LatticeInvolution: reflection.

        """
        return self._picard.reflection_through(lattice, DivClass(tuple(root)))

    def from_rows(
        self,
        lattice: PicLattice,
        rows: Sequence[Sequence[int]],
    ) -> LatticeInvolution:
        """Validate a user supplied matrix.

        Args:
            lattice (PicLattice): lattice.
            rows (Sequence[Sequence[int]]): square integer matrix.

        Raises:
            InvalidLatticeInvolutionError: wrong size or failed identities.

        Returns:
            LatticeInvolution: validated action.

        """
        if len(rows) != lattice.rank:
            msg: str = (
                f"Matrix of rank {len(rows)} does not act on a lattice of "
                f"rank {lattice.rank}."
            )
            raise InvalidLatticeInvolutionError(msg, reason="rank-mismatch")

        involution: LatticeInvolution = LatticeInvolution(
            lattice,
            ImmutableMatrix([list(row) for row in rows]),
        )
        involution.validate()
        return involution

    def exceptional_classes(self, lattice: PicLattice) -> list[DivClass]:
        """Enumerate exceptional classes.

        Args:
            lattice (PicLattice): lattice.

        Returns:
            list[DivClass]: ordered classes.

        """
        with self.timer.phase("enumerate"):
            classes: list[DivClass] = self._picard.exceptional_classes(
                lattice,
            )

        logger.info("Found %d exceptional classes", len(classes))
        return classes

    def fixed_rank(self, involution: LatticeInvolution) -> int:
        """Get the rank of the invariant sublattice."""
        return self._picard.fixed_rank(involution)

    def minimality(self, involution: LatticeInvolution) -> MinimalityResult:
        """Run the minimality test.

        Args:
            involution (LatticeInvolution): validated action.

        Returns:
            MinimalityResult: verdict with witness.

        """
        with self.timer.phase("minimality"):
            return self._picard.is_minimal(involution)

    def classify(self, involution: LatticeInvolution) -> PairClassification:
        """Classify a lattice pair.

        Args:
            involution (LatticeInvolution): validated action.

        Returns:
            PairClassification: label with minimality data.

        """
        with self.timer.phase("classify"):
            return self._picard.classify_pair(involution)

    def elementary_transformation(
        self,
        model: ConicBundleModel,
        *,
        on_section: bool,
        at_contact: int | None = None,
    ) -> ConicBundleModel:
        """Apply one elementary transformation.

        Args:
            model (ConicBundleModel): model.
            on_section (bool): blown-up point lies on the negative section.
            at_contact (int | None, optional): index of the contact point
                used. Defaults to None.

        Returns:
            ConicBundleModel: transformed model.

        """
        return self._conic_bundles.elementary_transformation(
            model,
            on_section=on_section,
            at_contact=at_contact,
        )

    def reduce(self, model: ConicBundleModel) -> PlaneReduction:
        """Reduce a model to a plane De Jonquieres model.

        Args:
            model (ConicBundleModel): model.

        Returns:
            PlaneReduction: steps and resulting degree.

        """
        with self.timer.phase("reduce"):
            return self._conic_bundles.reduce_to_plane_model(model)
