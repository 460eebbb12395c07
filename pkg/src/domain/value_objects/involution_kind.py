"""Involution kind value object."""

import re
from dataclasses import dataclass
from typing import Self

from src.domain.value_objects.involution_family import InvolutionFamily

GEISER_DEGREE: int = 8
BERTINI_DEGREE: int = 17


@dataclass(frozen=True, slots=True)
class InvolutionKind:
    """Conjugacy class label DJ(d), Geiser or Bertini with the map degree."""

    family: InvolutionFamily
    degree: int

    @classmethod
    def de_jonquieres(cls, degree: int) -> Self:
        """Make DJ(d) label.

        Args:
            degree (int): degree d >= 2.

        Returns:
            Self: label.

        """
        return cls(family=InvolutionFamily.de_jonquieres, degree=degree)

    @classmethod
    def geiser(cls) -> Self:
        """Make Geiser label.

        Returns:
            Self: label.

        """
        return cls(family=InvolutionFamily.geiser, degree=GEISER_DEGREE)

    @classmethod
    def bertini(cls) -> Self:
        """Make Bertini label.

        Returns:
            Self: label.

        """
        return cls(family=InvolutionFamily.bertini, degree=BERTINI_DEGREE)

    @classmethod
    def parse(cls, label: str) -> Self:
        """Read a label such as ``DJ(3)`` or ``Geiser``.

        Args:
            label (str): label text.

        Raises:
            ValueError: if the label is unknown.

        Returns:
            Self: label.

        """
        match = re.fullmatch(r"DJ\((\d+)\)", label.strip())

        if match is not None:
            return cls.de_jonquieres(int(match.group(1)))

        if label.strip() == InvolutionFamily.geiser:
            return cls.geiser()

        if label.strip() == InvolutionFamily.bertini:
            return cls.bertini()

        msg: str = f"Unknown involution label: {label!r}."
        raise ValueError(msg)

    @property
    def label(self) -> str:
        """Get printable label.

        Returns:
            str: ``DJ(d)``, ``Geiser`` or ``Bertini``.

        """
        if self.family is InvolutionFamily.de_jonquieres:
            return f"DJ({self.degree})"

        return str(self.family)

    def __str__(self) -> str:
        """Format as label."""
        return self.label
