"""Conic bundle model entity."""

from dataclasses import dataclass, replace
from typing import Self

from src.domain.exceptions.lattice import InvalidTransformationError

MIN_FIBRES: int = 2


@dataclass(frozen=True, slots=True)
class ConicBundleModel:
    """Fixed curve of a conic bundle involution drawn on a Hirzebruch surface.

    ``index`` is n for the surface F_n, ``fibre_count`` the number s of
    singular fibres and ``contacts`` the contact orders of the fixed curve
    with the negative section E_n. ``pending`` counts contact units moved
    off E_n by a transformation at a contact point and not yet restored by
    the following transformation at a general point of the curve.
    """

    index: int
    fibre_count: int
    contacts: tuple[int, ...] = ()
    pending: int = 0

    def __post_init__(self) -> None:
        """Validate counts.

        Raises:
            InvalidTransformationError: if a count is negative or a contact
                order is not positive.

        """
        if self.index < 0 or self.fibre_count < 0:
            msg: str = (
                f"F_{self.index} with {self.fibre_count} singular fibres is "
                "not a conic bundle model."
            )
            raise InvalidTransformationError(msg)

        if any(order < 1 for order in self.contacts):
            msg = f"Contact orders {self.contacts} must be positive."
            raise InvalidTransformationError(msg)

    @classmethod
    def from_de_jonquieres(cls, degree: int) -> Self:
        """Get the model obtained by blowing up the center of DJ(d).

        Args:
            degree (int): degree d >= 2.

        Returns:
            Self: model on F_1 with ``2d - 2`` singular fibres and ``d - 2``
                transversal contacts.

        """
        return cls(
            index=1,
            fibre_count=2 * degree - 2,
            contacts=tuple([1] * (degree - 2)),
        )

    @property
    def section_square(self) -> int:
        """Get the self-intersection of E_n.

        Returns:
            int: ``-n``.

        """
        return -self.index

    @property
    def genus(self) -> int:
        """Get the genus of the fixed curve from ``s = 2g + 2``.

        Raises:
            InvalidTransformationError: if s is odd or below 2.

        Returns:
            int: genus g.

        """
        if self.fibre_count < MIN_FIBRES or self.fibre_count % 2:
            msg: str = f"s = {self.fibre_count} is not of the form 2g + 2."
            raise InvalidTransformationError(msg)

        return (self.fibre_count - 2) // 2

    def elementary_transformation(
        self,
        *,
        on_section: bool,
        at_contact: int | None = None,
    ) -> Self:
        """Blow up a point of a fibre and contract the fibre.

        The result is F_(n+1) for a point on E_n or when n = 0, and
        F_(n-1) otherwise.

        Args:
            on_section (bool): whether the point lies on E_n.
            at_contact (int | None, optional): position of the contact
                point in ``contacts`` when the point is one. Defaults to None.

        Raises:
            InvalidTransformationError: if the contact position is unknown,
                the contact is already transversal, or a contact point is
                claimed off E_n.

        Returns:
            Self: transformed model.

        """
        if at_contact is not None:
            return self._lower_contact(at_contact, on_section=on_section)

        if on_section or self.index == 0:
            return replace(self, index=self.index + 1)

        if self.pending:
            return replace(
                self,
                index=self.index - 1,
                contacts=(*self.contacts, 1),
                pending=self.pending - 1,
            )

        return replace(self, index=self.index - 1)

    def _lower_contact(self, position: int, *, on_section: bool) -> Self:
        if not on_section:
            msg: str = "Contact points lie on E_n."
            raise InvalidTransformationError(msg)

        if not 0 <= position < len(self.contacts):
            msg = f"No contact point at position {position}."
            raise InvalidTransformationError(msg)

        order: int = self.contacts[position]

        if order == 1:
            msg = f"Contact at position {position} is already transversal."
            raise InvalidTransformationError(msg)

        contacts: list[int] = list(self.contacts)
        contacts[position] = order - 1

        return replace(
            self,
            index=self.index + 1,
            contacts=tuple(contacts),
            pending=self.pending + 1,
        )
