"""Vector fields with rational coefficients."""

from __future__ import annotations

from typing import Any, Iterable, Mapping

from foliate.algebra.poly import Variables, merge_variables
from foliate.algebra.ratfun import RatFun


class VField:
    """Vector field sum X_v d/dv."""

    __slots__ = ("variables", "components")

    variables: Variables
    components: dict[str, RatFun]

    def __init__(self, components: Mapping[str, Any], variables: Iterable[str] = ()):
        context = merge_variables(tuple(variables), components)
        self.components = {}
        for name in context:
            if name in components:
                value = RatFun.coerce(components[name])
                if not value.is_zero:
                    self.components[name] = value
        self.variables = context

    @classmethod
    def euler(cls, variables: Iterable[str]) -> VField:
        """The radial field sum z_i d/dz_i."""
        names = tuple(variables)
        return cls({name: RatFun.var(name) for name in names}, names)

    @classmethod
    def coordinate(cls, name: str, variables: Iterable[str] = ()) -> VField:
        """The coordinate field d/d<name>."""
        return cls({name: 1}, variables)

    def component(self, name: str) -> RatFun:
        """Coefficient of d/d<name>."""
        return self.components.get(name, RatFun.constant(0))

    @property
    def is_zero(self) -> bool:
        """True for the zero field."""
        return not self.components

    def apply(self, func: Any) -> Any:
        """X(f) = sum X_v df/dv."""
        total = func * 0
        for name, value in self.components.items():
            total = total + func.diff(name) * value
        return total

    def __str__(self) -> str:
        if not self.components:
            return "0"
        terms = (f"({value})*d/d{name}" for name, value in self.components.items())
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"VField({self})"
