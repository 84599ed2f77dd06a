"""Rational maps between named coordinate systems and pull-back of forms."""

from __future__ import annotations

import logging
from typing import Any, Iterable, Mapping

from foliate.algebra.poly import Variables, merge_variables
from foliate.algebra.quadratic import QuadElement
from foliate.algebra.ratfun import RatFun

from .dform import DForm, differential

LOG = logging.getLogger(__name__)


class RationalMap:
    """A map given by target variable -> rational function of the source.

    Target variables without a component are left unchanged.
    """

    __slots__ = ("source", "components")

    source: Variables
    components: dict[str, RatFun]

    def __init__(self, components: Mapping[str, Any], source: Iterable[str] = ()):
        self.components = {name: RatFun.coerce(v) for name, v in components.items()}
        context = tuple(source)
        for value in self.components.values():
            context = merge_variables(context, value.used_variables())
        self.source = context

    @classmethod
    def identity(cls, variables: Iterable[str] = ()) -> RationalMap:
        """The identity map."""
        return cls({}, variables)

    @property
    def targets(self) -> Variables:
        """Target variables with an explicit component."""
        return tuple(self.components)

    def image(self, name: str) -> RatFun:
        """Component of a target variable."""
        if name in self.components:
            return self.components[name]
        return RatFun.var(name)

    def after(self, inner: RationalMap) -> RationalMap:
        """The composition self o inner."""
        bindings = inner.components
        composed = {
            name: value.substitute(bindings) for name, value in self.components.items()
        }
        for name, value in bindings.items():
            composed.setdefault(name, value)
        return RationalMap(composed, inner.source)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMap):
            return NotImplemented
        names = set(self.components) | set(other.components)
        return all(self.image(n) == other.image(n) for n in names)

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        return ", ".join(f"{name} = {value}" for name, value in self.components.items())

    def __repr__(self) -> str:
        return f"RationalMap({self})"


def _determinant(rows: list[list[RatFun]]) -> RatFun:
    if not rows:
        return RatFun.constant(1)
    total = RatFun.constant(0)
    for col, entry in enumerate(rows[0]):
        if entry.is_zero:
            continue
        minor = [row[:col] + row[col + 1 :] for row in rows[1:]]
        term = entry * _determinant(minor)
        total = total + term if col % 2 == 0 else total - term
    return total


def jacobian_determinant(phi: RationalMap, targets: Iterable[str]) -> RatFun:
    """det of d(target images)/d(source); zero when the counts differ."""
    targets = tuple(targets)
    if len(targets) != len(phi.source):
        return RatFun.constant(0)
    rows = [[phi.image(t).diff(s) for s in phi.source] for t in targets]
    return _determinant(rows)


def pullback(phi: RationalMap, form: DForm) -> DForm:
    """phi^* of a form; coefficients are composed and differentials expanded."""
    bindings = phi.components
    ring = form.ring.substitute(bindings) if form.ring is not None else None
    images: dict[str, DForm] = {}

    def image(name: str) -> DForm:
        if name not in images:
            if name in bindings:
                images[name] = differential(bindings[name], phi.source)
            else:
                images[name] = DForm.differential(name)
        return images[name]

    result = DForm.zero(form.arity, phi.source, ring)
    for key, coeff in form.items():
        if isinstance(coeff, QuadElement):
            value: Any = coeff.substitute(bindings, ring)
        else:
            value = coeff.substitute(bindings)
        if value.is_zero:
            continue
        term = DForm.function(value, phi.source, ring)
        for name in key:
            term = term.wedge(image(name))
        result = result + term
    return result
