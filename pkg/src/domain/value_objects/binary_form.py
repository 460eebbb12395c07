"""Binary form value object."""

from dataclasses import dataclass
from typing import ClassVar, Self

from sympy import Symbol, symbols

from src.domain.value_objects.homogeneous_form import HomogeneousForm
from src.domain.value_objects.hpoly import HPoly

S, T = symbols("s t")


@dataclass(frozen=True, slots=True)
class BForm(HomogeneousForm):
    """Binary form in the line parameters (s:t)."""

    generators: ClassVar[tuple[Symbol, ...]] = (S, T)

    @classmethod
    def from_hpoly(cls, form: HPoly) -> Self:
        """Read a ternary form free of y as a binary form, x -> s, z -> t.

        Args:
            form (HPoly): form in x and z only.

        Returns:
            Self: binary form of the same degree.

        """
        return cls.from_terms(
            form.degree,
            {
                (power_x, power_z): coefficient
                for (power_x, _, power_z), coefficient in form.terms.items()
            },
        )

    @classmethod
    def linear_through(cls, first: int, last: int) -> Self:
        """Make the linear form vanishing at the parameter (first:last).

        Args:
            first (int): s coordinate of the root.
            last (int): t coordinate of the root.

        Returns:
            Self: ``last*s - first*t``.

        """
        return cls.from_terms(1, {(1, 0): last, (0, 1): -first})

    def root_of_linear(self) -> tuple[int, int]:
        """Get the root of a linear form a*s + b*t.

        Returns:
            tuple[int, int]: root (b : -a) with coprime integer entries.

        """
        canonical: BForm = self.canonical()
        terms = canonical.terms
        leading: int = int(terms.get((1, 0), 0))
        trailing: int = int(terms.get((0, 1), 0))

        return (trailing, -leading)
