"""Quadratic ring extensions used by branched double covers.

An element ``a + g*b`` of a cover ring stores the pair (a, b) of base rational
functions. The generator ``g`` satisfies ``g^2 = r`` for a nonzero base element
``r`` and every product is reduced with that relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from foliate.exceptions import DivisionByZero, IncompatibleRings

from .poly import MPoly, Variables, merge_variables
from .ratfun import RatFun


@dataclass(frozen=True)
class QuadCoverRing:
    """Base rational functions with a square root ``generator`` of ``relation``."""

    generator: str
    relation: RatFun
    base_variables: Variables = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.relation.is_zero:
            raise DivisionByZero(
                f"Cover relation {self.generator}^2 = 0 is degenerate",
                context={"generator": self.generator},
            )
        if self.generator in self.relation.used_variables():
            raise ValueError(
                f"Relation {self.relation} may not contain "
                f"the generator {self.generator}"
            )

    def element(self, a: Any = 0, b: Any = 0) -> QuadElement:
        """The element a + g*b."""
        return QuadElement(self, RatFun.coerce(a), RatFun.coerce(b))

    @property
    def gen(self) -> QuadElement:
        """The generator itself."""
        return self.element(0, 1)

    def reduce(self, value: Any) -> QuadElement:
        """Reduce an expression that may contain the generator."""
        return quad_reduce(value, self)

    def substitute(self, bindings: Mapping[str, Any]) -> QuadCoverRing:
        """Pull the relation back along base bindings."""
        return QuadCoverRing(
            self.generator,
            self.relation.substitute(bindings),
            self.base_variables,
        )

    def __str__(self) -> str:
        return f"{self.generator}^2 = {self.relation}"


class QuadElement:
    """Element a + g*b of a quadratic cover ring."""

    __slots__ = ("ring", "a", "b")

    def __init__(self, ring: QuadCoverRing, a: RatFun, b: RatFun):
        self.ring = ring
        self.a = a
        self.b = b

    def _coerce(self, other: Any) -> QuadElement | None:
        if isinstance(other, QuadElement):
            if other.ring != self.ring:
                raise IncompatibleRings(
                    f"Cannot combine elements of {self.ring} and {other.ring}"
                )
            return other
        if isinstance(other, (RatFun, MPoly, int, Fraction)) and not isinstance(
            other, bool
        ):
            return QuadElement(self.ring, RatFun.coerce(other), RatFun.constant(0))
        return None

    # context

    @property
    def variables(self) -> Variables:
        """Base variables of both parts and of the relation."""
        context = merge_variables(self.a.variables, self.b.variables)
        return merge_variables(context, self.ring.relation.variables)

    def used_variables(self) -> Variables:
        """Base variables that occur in a, b or the relation."""
        used = (
            set(self.a.used_variables())
            | set(self.b.used_variables())
            | set(self.ring.relation.used_variables())
        )
        return tuple(v for v in self.variables if v in used)

    # arithmetic

    def __add__(self, other: Any) -> QuadElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadElement(self.ring, self.a + rhs.a, self.b + rhs.b)

    def __radd__(self, other: Any) -> QuadElement:
        return self.__add__(other)

    def __neg__(self) -> QuadElement:
        return QuadElement(self.ring, -self.a, -self.b)

    def __sub__(self, other: Any) -> QuadElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadElement(self.ring, self.a - rhs.a, self.b - rhs.b)

    def __rsub__(self, other: Any) -> QuadElement:
        return (-self).__add__(other)

    def __mul__(self, other: Any) -> QuadElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        rel = self.ring.relation
        return QuadElement(
            self.ring,
            self.a * rhs.a + rel * self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a,
        )

    def __rmul__(self, other: Any) -> QuadElement:
        return self.__mul__(other)

    def conjugate(self) -> QuadElement:
        """a - g*b."""
        return QuadElement(self.ring, self.a, -self.b)

    def norm(self) -> RatFun:
        """a^2 - r*b^2."""
        return self.a * self.a - self.ring.relation * self.b * self.b

    def inverse(self) -> QuadElement:
        """Multiplicative inverse through the norm."""
        norm = self.norm()
        if norm.is_zero:
            raise DivisionByZero(
                f"{self} has zero norm in the cover {self.ring} and is not invertible"
            )
        conj = self.conjugate()
        return QuadElement(self.ring, conj.a / norm, conj.b / norm)

    def __truediv__(self, other: Any) -> QuadElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs.b.is_zero:
            if rhs.a.is_zero:
                raise DivisionByZero(f"Division of {self} by zero")
            return QuadElement(self.ring, self.a / rhs.a, self.b / rhs.a)
        return self * rhs.inverse()

    def __rtruediv__(self, other: Any) -> QuadElement:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __pow__(self, exponent: int) -> QuadElement:
        base = self if exponent >= 0 else self.inverse()
        result = self.ring.element(1)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    # comparison

    def __eq__(self, other: object) -> bool:
        try:
            rhs = self._coerce(other)
        except IncompatibleRings:
            return False
        if rhs is None:
            return NotImplemented
        return self.a == rhs.a and self.b == rhs.b

    def __hash__(self) -> int:
        if self.b.is_zero:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return not self.is_zero

    @property
    def is_zero(self) -> bool:
        """True for zero."""
        return self.a.is_zero and self.b.is_zero

    @property
    def is_base(self) -> bool:
        """True when the odd part vanishes."""
        return self.b.is_zero

    @property
    def is_constant(self) -> bool:
        """True for base constants."""
        return self.is_base and self.a.is_constant

    # calculus

    def diff(self, name: str) -> QuadElement:
        """Partial derivative of a base variable.

        d/dv (a + g*b) = a_v + g*(b_v + b*r_v/(2r)) since 2 g g_v = r_v.
        """
        if name == self.ring.generator:
            raise ValueError(
                f"The generator {name} is not a coordinate of the cover coframe"
            )
        rel = self.ring.relation
        db = self.b.diff(name)
        if not self.b.is_zero:
            drel = rel.diff(name)
            if not drel.is_zero:
                db = db + self.b * drel / (rel * 2)
        return QuadElement(self.ring, self.a.diff(name), db)

    def substitute(
        self, bindings: Mapping[str, Any], ring: QuadCoverRing | None = None
    ) -> QuadElement:
        """Pull back along base bindings, the relation included."""
        target = ring or self.ring.substitute(bindings)
        a, b = self.a.substitute(bindings), self.b.substitute(bindings)
        return QuadElement(target, a, b)

    # rendering

    def __str__(self) -> str:
        gen = self.ring.generator
        if self.b.is_zero:
            return str(self.a)
        odd = f"{gen}*({self.b})"
        if self.a.is_zero:
            return odd
        return f"{self.a} + {odd}"

    def __repr__(self) -> str:
        return f"QuadElement({self}; {self.ring})"


def _reduce_poly(p: MPoly, ring: QuadCoverRing) -> QuadElement:
    gen = ring.generator
    base_context = tuple(v for v in p.variables if v != gen)
    even = RatFun.constant(0)
    odd = RatFun.constant(0)
    for power, coeff in p.coefficients_in(gen).items():
        part = RatFun(coeff.lift(base_context)) * ring.relation ** (power // 2)
        if power % 2:
            odd = odd + part
        else:
            even = even + part
    return QuadElement(ring, even, odd)


def quad_reduce(value: Any, ring: QuadCoverRing) -> QuadElement:
    """Canonical pair for an expression in the base variables and the generator.

    Accepts a rational function that may contain the generator, or a pair (a, b)
    meaning a + g*b whose parts may themselves contain the generator.
    """
    if isinstance(value, QuadElement):
        if value.ring != ring:
            raise IncompatibleRings(f"Element of {value.ring} reduced in {ring}")
        return quad_reduce((value.a, value.b), ring)
    if isinstance(value, tuple):
        even, odd = value
        return quad_reduce(even, ring) + ring.gen * quad_reduce(odd, ring)
    func = RatFun.coerce(value)
    num = _reduce_poly(func.num, ring)
    if ring.generator not in func.den.used_variables():
        base_context = tuple(v for v in func.den.variables if v != ring.generator)
        den = RatFun(func.den.lift(base_context))
        return QuadElement(ring, num.a / den, num.b / den)
    return num / _reduce_poly(func.den, ring)
