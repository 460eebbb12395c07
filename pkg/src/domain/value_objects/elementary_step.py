"""Elementary transformation step value object."""

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class ElementaryStep:
    """One elementary transformation applied to a conic bundle model."""

    on_section: bool
    at_contact: int | None
    index_before: int
    index_after: int
