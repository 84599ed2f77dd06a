"""Pull-back of forms to a branched double cover."""

from __future__ import annotations

import logging

from foliate.algebra.quadratic import QuadCoverRing, quad_reduce
from foliate.exceptions import DivisionByZero

from .dform import DForm

LOG = logging.getLogger(__name__)


def generator_differential(ring: QuadCoverRing) -> DForm:
    """d(g) expressed in the cover coframe: g * dr / (2r)."""
    rel = ring.relation
    pairs = []
    for name in rel.used_variables():
        pairs.append(((name,), ring.element(0, rel.diff(name) / (rel * 2))))
    return DForm(1, pairs, ring.base_variables, ring)


def cover_pullback(form: DForm, ring: QuadCoverRing, vertical: str) -> DForm:
    """Rewrite a form in (base, generator) on the cover g^2 = r.

    Even powers of the generator are replaced by powers of r and d(g) is
    eliminated with 2 g dg = dr, so the result uses the coframe of the base
    variables and ``vertical``.
    """
    if ring.relation.is_zero:
        raise DivisionByZero("Cover relation vanishes")
    if vertical not in ring.relation.used_variables():
        raise ValueError(
            f"Vertical variable {vertical} does not occur in the relation {ring}"
        )
    if form.ring is not None:
        raise ValueError("Form is already defined on a cover")
    gen = ring.generator
    dgen = generator_differential(ring)
    context = tuple(v for v in form.variables if v != gen) + (vertical,)
    result = DForm.zero(form.arity, context, ring)
    for key, coeff in form.items():
        term = DForm.function(quad_reduce(coeff, ring), context, ring)
        for name in key:
            term = term.wedge(dgen if name == gen else DForm.differential(name))
        result = result + term
    LOG.debug("Lifted a %d-form to the cover %s", form.arity, ring)
    return result


def descend(form: DForm) -> DForm:
    """A form over a cover with no generator part, as a form over the base."""
    if form.ring is None:
        return form
    pairs = []
    for key, coeff in form.items():
        if not coeff.is_base:  # type: ignore[union-attr]
            raise ValueError(f"{form} has a part odd in {form.ring.generator}")
        pairs.append((key, coeff.a))  # type: ignore[union-attr]
    return DForm(form.arity, pairs, form.variables)
