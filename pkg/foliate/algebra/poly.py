"""Sparse multivariate polynomials with rational coefficients.

Polynomials are thin immutable wrappers around ``sympy`` ring elements over QQ
in graded lexicographic order. Every polynomial lives in a variable context
(an ordered tuple of names); binary operations merge contexts by name union,
keeping the order of the left operand and appending unseen names.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Any, Iterable, Literal, Mapping

import sympy
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed, GeneratorsError
from sympy.polys.rings import PolyElement, PolyRing

from foliate.exceptions import DivisionByZero

if TYPE_CHECKING:
    from .ratfun import RatFun

LOG = logging.getLogger(__name__)

Scalar = int | Fraction
Monomial = tuple[int, ...]
Variables = tuple[str, ...]


@lru_cache(maxsize=None)
def poly_ring(variables: Variables) -> PolyRing:
    """Polynomial ring over QQ in grlex order on the given names."""
    if len(set(variables)) != len(variables):
        raise ValueError(f"Duplicate variable names in context {variables}")
    return PolyRing(tuple(sympy.Symbol(v) for v in variables), QQ, grlex)


@lru_cache(maxsize=None)
def ring_names(ring: PolyRing) -> Variables:
    """Variable names of a ring."""
    return tuple(str(s) for s in ring.symbols)


def merge_variables(first: Iterable[str], second: Iterable[str]) -> Variables:
    """Union of two contexts keeping the order of the first one."""
    merged = list(first)
    seen = set(merged)
    for name in second:
        if name not in seen:
            merged.append(name)
            seen.add(name)
    return tuple(merged)


def to_qq(value: Any) -> Any:
    """Convert an int or fraction to a ground domain element."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def from_qq(value: Any) -> Fraction:
    """Convert a ground domain element to a fraction."""
    return Fraction(int(value.numerator), int(value.denominator))


class MPoly:
    """Immutable polynomial in a named variable context."""

    __slots__ = ("rep",)

    def __init__(self, rep: PolyElement):
        self.rep = rep

    # construction

    @classmethod
    def zero(cls, variables: Iterable[str] = ()) -> MPoly:
        """The zero polynomial."""
        return cls(poly_ring(tuple(variables)).zero)

    @classmethod
    def constant(cls, value: Scalar, variables: Iterable[str] = ()) -> MPoly:
        """A constant polynomial."""
        ring = poly_ring(tuple(variables))
        return cls(ring.ground_new(to_qq(value)))

    @classmethod
    def var(cls, name: str, variables: Iterable[str] | None = None) -> MPoly:
        """The polynomial consisting of one variable."""
        context = tuple(variables) if variables is not None else (name,)
        if name not in context:
            context = context + (name,)
        ring = poly_ring(context)
        return cls(ring.gens[context.index(name)])

    @classmethod
    def from_terms(
        cls, terms: Mapping[Monomial, Scalar], variables: Iterable[str]
    ) -> MPoly:
        """Build from a map of exponent vectors to coefficients."""
        context = tuple(variables)
        ring = poly_ring(context)
        data = {}
        for monom, coeff in terms.items():
            if len(monom) != len(context):
                raise ValueError(
                    f"Exponent vector {monom} does not match context {context}"
                )
            if coeff:
                data[tuple(monom)] = to_qq(coeff)
        return cls(ring.from_dict(data))

    # context handling

    @property
    def variables(self) -> Variables:
        """Ordered variable context."""
        return ring_names(self.rep.ring)

    def lift(self, variables: Iterable[str]) -> MPoly:
        """Re-express the polynomial in a larger context."""
        context = tuple(variables)
        if context == self.variables:
            return self
        try:
            return MPoly(self.rep.set_ring(poly_ring(context)))
        except GeneratorsError as exc:
            raise ValueError(
                f"Cannot drop used variables of {self} into context {context}"
            ) from exc

    def used_variables(self) -> Variables:
        """Variables that occur with a nonzero exponent."""
        used = [False] * len(self.variables)
        for monom in self.rep.itermonoms():
            for idx, exp in enumerate(monom):
                if exp:
                    used[idx] = True
        return tuple(n for n, flag in zip(self.variables, used) if flag)

    def _coerce(self, other: Any) -> MPoly | None:
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MPoly.constant(other, self.variables)
        return None

    def _aligned(self, other: MPoly) -> tuple[PolyElement, PolyElement]:
        if self.rep.ring == other.rep.ring:
            return self.rep, other.rep
        context = merge_variables(self.variables, other.variables)
        return self.lift(context).rep, other.lift(context).rep

    # arithmetic

    def __add__(self, other: Any) -> MPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._aligned(rhs)
        return MPoly(a + b)

    def __radd__(self, other: Any) -> MPoly:
        return self.__add__(other)

    def __sub__(self, other: Any) -> MPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._aligned(rhs)
        return MPoly(a - b)

    def __rsub__(self, other: Any) -> MPoly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs.__sub__(self)

    def __mul__(self, other: Any) -> MPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._aligned(rhs)
        return MPoly(a * b)

    def __rmul__(self, other: Any) -> MPoly:
        return self.__mul__(other)

    def __neg__(self) -> MPoly:
        return MPoly(-self.rep)

    def __pow__(self, exponent: int) -> MPoly:
        if exponent < 0:
            raise ValueError("Negative powers of polynomials are rational functions")
        return MPoly(self.rep**exponent)

    def scale(self, factor: Scalar) -> MPoly:
        """Multiply by a rational constant."""
        if not factor:
            return MPoly(self.rep.ring.zero)
        return MPoly(self.rep.mul_ground(to_qq(factor)))

    # comparison

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._aligned(rhs)
        return bool(a == b)

    def __hash__(self) -> int:
        names = self.variables
        return hash(
            frozenset(
                (tuple((n, e) for n, e in zip(names, monom) if e), from_qq(coeff))
                for monom, coeff in self.rep.iterterms()
            )
        )

    def __bool__(self) -> bool:
        return bool(self.rep)

    # inspection

    @property
    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self.rep

    @property
    def is_constant(self) -> bool:
        """True for constants, zero included."""
        return bool(self.rep.is_ground)

    @property
    def constant_value(self) -> Fraction:
        """Value of a constant polynomial."""
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return from_qq(self.rep.LC) if self.rep else Fraction(0)

    @property
    def total_degree(self) -> int:
        """Total degree, -1 for zero."""
        if not self.rep:
            return -1
        return max(sum(monom) for monom in self.rep.itermonoms())

    def degree_in(self, name: str) -> int:
        """Degree in one variable, -1 for zero."""
        if not self.rep:
            return -1
        if name not in self.variables:
            return 0
        idx = self.variables.index(name)
        return max(monom[idx] for monom in self.rep.itermonoms())

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical (grlex, descending) order."""
        return [(monom, from_qq(coeff)) for monom, coeff in self.rep.terms()]

    @property
    def leading_coefficient(self) -> Fraction:
        """Coefficient of the grlex leading term."""
        if not self.rep:
            return Fraction(0)
        return from_qq(self.rep.LC)

    @property
    def sign_coefficient(self) -> Fraction:
        """Leading coefficient in grlex order on the sorted variable names.

        Unlike ``leading_coefficient`` it does not depend on the context order.
        """
        if not self.rep:
            return Fraction(0)
        names = self.variables
        order = sorted(range(len(names)), key=names.__getitem__)
        _, coeff = max(
            self.rep.iterterms(),
            key=lambda term: (sum(term[0]), tuple(term[0][i] for i in order)),
        )
        return from_qq(coeff)

    def is_homogeneous(self) -> bool:
        """True when every term has the same total degree."""
        return len({sum(m) for m in self.rep.itermonoms()}) <= 1

    def homogeneous_components(self) -> dict[int, MPoly]:
        """Split into homogeneous parts keyed by degree."""
        parts: dict[int, dict[Monomial, Any]] = {}
        for monom, coeff in self.rep.iterterms():
            parts.setdefault(sum(monom), {})[monom] = coeff
        ring = self.rep.ring
        return {deg: MPoly(ring.from_dict(parts[deg])) for deg in sorted(parts)}

    def coefficients_in(self, name: str) -> dict[int, MPoly]:
        """Coefficients of the powers of one variable (same context)."""
        if name not in self.variables:
            return {0: self} if self.rep else {}
        idx = self.variables.index(name)
        parts: dict[int, dict[Monomial, Any]] = {}
        for monom, coeff in self.rep.iterterms():
            rest = monom[:idx] + (0,) + monom[idx + 1 :]
            parts.setdefault(monom[idx], {})[rest] = coeff
        ring = self.rep.ring
        return {k: MPoly(ring.from_dict(parts[k])) for k in sorted(parts)}

    # calculus and evaluation

    def diff(self, name: str) -> MPoly:
        """Partial derivative."""
        if name not in self.variables:
            return MPoly(self.rep.ring.zero)
        return MPoly(self.rep.diff(self.variables.index(name)))

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        """Exact value at a rational point covering the used variables."""
        names = self.variables
        total = Fraction(0)
        for monom, coeff in self.rep.iterterms():
            value = from_qq(coeff)
            for name, exp in zip(names, monom):
                if exp:
                    try:
                        value *= Fraction(point[name]) ** exp
                    except KeyError as exc:
                        raise ValueError(f"No value given for variable {name}") from exc
            total += value
        return total

    def substitute(self, bindings: Mapping[str, Any]) -> RatFun:
        """Compose with rational bindings; unbound variables pass through.

        The composition is assembled over a common denominator so only a single
        normalization happens at the end.
        """
        from .ratfun import RatFun  # pylint: disable=import-outside-toplevel

        names = self.variables
        bound = {
            name: RatFun.coerce(bindings[name])
            for name in self.used_variables()
            if name in bindings
        }
        context: Variables = tuple(n for n in names if n not in bound)
        for value in bound.values():
            context = merge_variables(context, value.variables)
        ring = poly_ring(context)

        nums: dict[str, PolyElement] = {}
        dens: dict[str, PolyElement] = {}
        for name in names:
            if name in bound:
                nums[name] = bound[name].num.lift(context).rep
                dens[name] = bound[name].den.lift(context).rep
        degrees = {
            name: max((m[i] for m in self.rep.itermonoms()), default=0)
            for i, name in enumerate(names)
            if name in bound
        }
        power_cache: dict[tuple[str, int, str], PolyElement] = {}

        def power(name: str, exp: int, part: Literal["num", "den"]) -> PolyElement:
            key = (name, exp, part)
            if key not in power_cache:
                base = nums[name] if part == "num" else dens[name]
                power_cache[key] = base**exp
            return power_cache[key]

        numerator = ring.zero
        for monom, coeff in self.rep.iterterms():
            term = ring.ground_new(coeff)
            for name, exp in zip(names, monom):
                if name in bound:
                    term *= power(name, exp, "num") * power(
                        name, degrees[name] - exp, "den"
                    )
                elif exp:
                    term *= ring.gens[context.index(name)] ** exp
            numerator += term
        denominator = ring.one
        for name, deg in degrees.items():
            denominator *= power(name, deg, "den")
        return RatFun(MPoly(numerator), MPoly(denominator))

    # divisibility

    def gcd(self, other: MPoly) -> MPoly:
        """Primitive gcd with positive leading coefficient; gcd(0, 0) = 0."""
        a, b = self._aligned(other)
        if not a and not b:
            return MPoly(a)
        return MPoly(a.gcd(b)).primitive()

    def exquo(self, other: MPoly) -> MPoly:
        """Exact quotient, ValueError when the division leaves a remainder."""
        a, b = self._aligned(other)
        if not b:
            raise DivisionByZero("Polynomial division by zero")
        try:
            return MPoly(a.exquo(b))
        except ExactQuotientFailed as exc:
            raise ValueError(f"{other} does not divide {self}") from exc

    def divides(self, other: MPoly) -> bool:
        """True when self divides other exactly."""
        if self.is_zero:
            return other.is_zero
        a, b = self._aligned(other)
        return not b.rem(a)

    def monic(self) -> MPoly:
        """Divide by the leading coefficient."""
        return MPoly(self.rep.monic()) if self.rep else self

    def primitive(self) -> MPoly:
        """Integer coefficients without common factor, positive leading term."""
        if not self.rep:
            return self
        coeffs = [from_qq(c) for c in self.rep.itercoeffs()]
        den = math.lcm(*(c.denominator for c in coeffs))
        num = math.gcd(*(c.numerator * (den // c.denominator) for c in coeffs))
        factor = Fraction(den, num)
        if self.sign_coefficient < 0:
            factor = -factor
        return self.scale(factor)

    def factor(self) -> tuple[Fraction, list[tuple[MPoly, int]]]:
        """Content and monic irreducible factors over the rationals."""
        if self.is_constant:
            return self.constant_value, []
        coeff, factors = self.rep.factor_list()
        content = from_qq(coeff)
        result = []
        for factor, mult in factors:
            lead = from_qq(factor.LC)
            content *= lead**mult
            result.append((MPoly(factor.monic()), int(mult)))
        result.sort(key=lambda item: (item[0].total_degree, str(item[0])))
        return content, result

    # rendering

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"MPoly({self}, {self.variables})"


def render_monomial(monom: Monomial, names: Variables) -> str:
    """Render a power product, empty for 1."""
    parts = []
    for name, exp in zip(names, monom):
        if exp == 1:
            parts.append(name)
        elif exp:
            parts.append(f"{name}^{exp}")
    return "*".join(parts)


def render_poly(p: MPoly) -> str:
    """Canonical text: grlex terms, ``^`` powers, ``*`` products."""
    terms = p.terms()
    if not terms:
        return "0"
    out = []
    for pos, (monom, coeff) in enumerate(terms):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = render_monomial(monom, p.variables)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if pos == 0:
            out.append(f"-{text}" if sign == "-" else text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


def poly_arith(op: Literal["add", "sub", "mul"], a: MPoly, b: MPoly) -> MPoly:
    """Exact ring operation on two polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"Unknown polynomial operation {op!r}")


def poly_gcd(a: MPoly, b: MPoly) -> MPoly:
    """Canonical greatest common divisor."""
    return a.gcd(b)


def poly_substitute(p: MPoly, bindings: Mapping[str, Any]) -> RatFun:
    """Substitute rational functions for variables."""
    return p.substitute(bindings)


def homogeneous_components(p: MPoly) -> dict[int, MPoly]:
    """Homogeneous decomposition keyed by degree."""
    return p.homogeneous_components()


def poly_evaluate(p: MPoly, point: Mapping[str, Fraction]) -> Fraction:
    """Exact evaluation at a rational point."""
    return p.evaluate(point)


def poly_factor(p: MPoly) -> tuple[Fraction, list[tuple[MPoly, int]]]:
    """Factorization into monic irreducibles."""
    return p.factor()
