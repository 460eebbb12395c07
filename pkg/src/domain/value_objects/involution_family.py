"""Involution family value object."""

from enum import StrEnum


class InvolutionFamily(StrEnum):
    """Involution family value object."""

    de_jonquieres = "DJ"
    geiser = "Geiser"
    bertini = "Bertini"
