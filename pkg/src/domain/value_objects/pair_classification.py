"""Pair classification value object."""

from dataclasses import dataclass

from src.domain.value_objects.div_class import DivClass
from src.domain.value_objects.minimality_result import MinimalityResult
from src.domain.value_objects.pair_label import PairLabel


@dataclass(frozen=True, slots=True)
class PairClassification:
    """Label of a lattice pair, its invariant rank and the evidence.

    The fibration cases (i) and (ii) differ by the action on the base of
    the conic bundle, which the lattice does not see; they share a label.
    """

    label: PairLabel
    fixed_rank: int
    minimality: MinimalityResult
    stable_pencils: tuple[DivClass, ...] = ()
