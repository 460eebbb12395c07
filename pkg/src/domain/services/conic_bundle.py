"""Conic bundle domain service."""

import logging

from src.domain.entities.conic_bundle_model import ConicBundleModel
from src.domain.exceptions.lattice import InvalidTransformationError
from src.domain.value_objects.elementary_step import ElementaryStep
from src.domain.value_objects.plane_reduction import PlaneReduction

logger: logging.Logger = logging.getLogger(__name__)


class ConicBundleService:
    """Elementary transformations and reduction to De Jonquieres form."""

    def elementary_transformation(
        self,
        model: ConicBundleModel,
        *,
        on_section: bool,
        at_contact: int | None = None,
    ) -> ConicBundleModel:
        """Apply one elementary transformation.

        Args:
            model (ConicBundleModel): model on F_n.
            on_section (bool): whether the point lies on E_n.
            at_contact (int | None, optional): contact position.
                Defaults to None.

        Returns:
            ConicBundleModel: model on F_(n+1) or F_(n-1).

        """
        return model.elementary_transformation(
            on_section=on_section,
            at_contact=at_contact,
        )

    def reduce_to_plane_model(self, model: ConicBundleModel) -> PlaneReduction:
        """Reduce a model to F_1 with transversal contacts.

        Transformations at general points of the curve bring the index to
        1; each contact of order k > 1 then takes k - 1 rounds of a
        transformation at the contact point followed by one at a general
        point of the curve.

        Args:
            model (ConicBundleModel): starting model.

        Raises:
            InvalidTransformationError: if the final contacts do not add up
                to the genus.

        Returns:
            PlaneReduction: plane degree and step log.

        """
        genus: int = model.genus
        steps: list[ElementaryStep] = []
        current: ConicBundleModel = model

        while current.index != 1:
            current = self._step(current, steps, on_section=False)

        for position in range(len(current.contacts)):
            while current.contacts[position] > 1:
                current = self._step(
                    current,
                    steps,
                    on_section=True,
                    at_contact=position,
                )
                current = self._step(current, steps, on_section=False)

        if sum(current.contacts) != genus:
            msg: str = (
                f"Contacts {current.contacts} on F_1 do not add up to the "
                f"genus {genus}."
            )
            raise InvalidTransformationError(msg)

        logger.debug("Reduced to the plane in %d steps", len(steps))

        return PlaneReduction(
            genus=genus,
            plane_degree=genus + 2,
            center_multiplicity=genus,
            steps=tuple(steps),
        )

    def _step(
        self,
        model: ConicBundleModel,
        steps: list[ElementaryStep],
        *,
        on_section: bool,
        at_contact: int | None = None,
    ) -> ConicBundleModel:
        transformed: ConicBundleModel = model.elementary_transformation(
            on_section=on_section,
            at_contact=at_contact,
        )
        steps.append(
            ElementaryStep(
                on_section=on_section,
                at_contact=at_contact,
                index_before=model.index,
                index_after=transformed.index,
            ),
        )

        return transformed
