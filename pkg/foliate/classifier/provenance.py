"""Recorded coordinate changes from the strict transform to a witness."""

from __future__ import annotations

import logging
from typing import Any, Iterable, Mapping

from foliate.algebra.poly import Variables
from foliate.algebra.quadratic import QuadCoverRing, QuadElement, quad_reduce
from foliate.algebra.ratfun import RatFun
from foliate.exceptions import DegenerateStep
from foliate.forms import (
    Coeff,
    DForm,
    RationalMap,
    cover_pullback,
    jacobian_determinant,
    pullback,
)
from foliate.io.formtext import parse_coefficient

from .models import CoverStep, MapStep, ScaleStep, Step

LOG = logging.getLogger(__name__)


def invertible_map(phi: RationalMap, targets: Variables) -> RationalMap:
    """Reject maps whose Jacobian determinant vanishes identically."""
    if jacobian_determinant(phi, targets).is_zero:
        raise DegenerateStep(
            f"Map {phi} from {phi.source} to {targets} is singular",
            context={"map": str(phi)},
        )
    return phi


def nonzero_factor(factor: Coeff) -> Coeff:
    """Reject scale factors that vanish identically."""
    if factor.is_zero:
        raise DegenerateStep("Scale factor vanishes identically")
    return factor


class Trail:
    """A form together with the steps that produced it from eta."""

    def __init__(self, form: DForm):
        self.form = form
        self.variables: Variables = form.variables
        self.ring: QuadCoverRing | None = form.ring
        self.steps: list[Step] = []

    def map(self, components: Mapping[str, Any], source: Iterable[str]) -> DForm:
        """Pull back by target -> function of the new coordinates."""
        phi = invertible_map(RationalMap(components, source), self.variables)
        self.form = pullback(phi, self.form)
        self.variables = tuple(source)
        self.ring = self.form.ring
        self.steps.append(
            MapStep(
                source=list(self.variables),
                components={name: str(value) for name, value in phi.components.items()},
            )
        )
        LOG.debug("Pulled back by %s", phi)
        return self.form

    def scale(self, factor: Any) -> DForm:
        """Multiply by a function of the current coordinates."""
        if isinstance(factor, QuadElement) and factor.is_base:
            factor = factor.a
        if not isinstance(factor, QuadElement):
            factor = RatFun.coerce(factor)
        factor = nonzero_factor(factor)
        self.form = self.form * factor
        self.steps.append(ScaleStep(factor=str(factor)))
        return self.form

    def cover(self, ring: QuadCoverRing, vertical: str) -> DForm:
        """Lift to a double cover; the generator stops being a coordinate."""
        self.form = cover_pullback(self.form, ring, vertical)
        base = tuple(v for v in self.variables if v != ring.generator)
        self.variables = base + ((vertical,) if vertical not in base else ())
        self.ring = ring
        self.steps.append(
            CoverStep(
                generator=ring.generator, relation=str(ring.relation), vertical=vertical
            )
        )
        LOG.debug("Lifted to the cover %s", ring)
        return self.form

    @property
    def cover_text(self) -> str | None:
        """The current relation as text."""
        return str(self.ring) if self.ring is not None else None


def _names(variables: Iterable[str], ring: QuadCoverRing | None) -> Variables:
    names = tuple(variables)
    if ring is not None and ring.generator not in names:
        names = names + (ring.generator,)
    return names


def parse_function(
    text: str, variables: Iterable[str], ring: QuadCoverRing | None = None
) -> Coeff:
    """A function of the current coordinates, reduced on the cover."""
    value = parse_coefficient(text, _names(variables, ring))
    if ring is None:
        return value
    return quad_reduce(value, ring)


def apply_step(
    form: DForm, variables: Variables, step: Step
) -> tuple[DForm, Variables]:
    """Replay one recorded step."""
    ring = form.ring
    if isinstance(step, MapStep):
        source = tuple(step.source)
        components = {
            name: parse_coefficient(text, source)
            for name, text in step.components.items()
        }
        phi = invertible_map(RationalMap(components, source), variables)
        return pullback(phi, form), source
    if isinstance(step, ScaleStep):
        factor = nonzero_factor(parse_function(step.factor, variables, ring))
        return form * factor, variables
    base = tuple(v for v in variables if v != step.generator)
    relation = parse_coefficient(step.relation, base + (step.vertical,))
    cover = QuadCoverRing(step.generator, relation, base)
    lifted = cover_pullback(form, cover, step.vertical)
    names = base + ((step.vertical,) if step.vertical not in base else ())
    return lifted, names


def replay(eta: DForm, steps: Iterable[Step]) -> tuple[DForm, Variables]:
    """Apply every step to the strict transform."""
    form, variables = eta, eta.variables
    for step in steps:
        form, variables = apply_step(form, variables, step)
    return form, variables
