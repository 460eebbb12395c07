"""Pair label value object."""

from enum import StrEnum


class PairLabel(StrEnum):
    """Case of a surface with biregular involution."""

    fibration = "(i)/(ii)"
    plane = "(iii)"
    quadric = "(iv)"
    del_pezzo_degree_2 = "(v)"
    del_pezzo_degree_1 = "(vi)"
    non_minimal = "non-minimal"
