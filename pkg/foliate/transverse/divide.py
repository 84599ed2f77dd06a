"""Proportionality of 1-forms and polar loci of witnesses."""

from __future__ import annotations

from typing import Iterable

from foliate.algebra.poly import MPoly
from foliate.algebra.quadratic import QuadElement
from foliate.exceptions import DivisionByZero
from foliate.forms import Coeff, DForm


def form_divide(nu: DForm, mu: DForm) -> Coeff | None:
    """g with nu = g mu, or None when the forms are not proportional."""
    if mu.is_zero:
        raise DivisionByZero("Division by the zero form")
    if nu.is_zero:
        return mu.zero_coeff()
    if not nu.wedge(mu).is_zero:
        return None
    key, denominator = next(mu.items())
    ratio = nu.coefficient(*key) / denominator
    if nu != mu * ratio:
        return None
    return ratio


def _denominators(coeff: Coeff) -> list[MPoly]:
    if isinstance(coeff, QuadElement):
        relation = coeff.ring.relation
        return [coeff.a.den, coeff.b.den, relation.den, relation.num]
    return [coeff.den]


def polar_locus(forms: Iterable[DForm]) -> list[MPoly]:
    """Irreducible factors of the coefficient denominators.

    For cover-valued forms the branch locus of the relation is included.
    """
    found: dict[str, MPoly] = {}
    for form in forms:
        for _, coeff in form.items():
            for den in _denominators(coeff):
                if den.is_constant:
                    continue
                _, factors = den.factor()
                for factor, _mult in factors:
                    found.setdefault(str(factor), factor)
    return sorted(found.values(), key=lambda p: (p.total_degree, str(p)))
