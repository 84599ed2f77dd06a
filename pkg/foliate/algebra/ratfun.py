"""Rational functions as reduced fractions of polynomials."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Mapping

from foliate.exceptions import DivisionByZero

from .poly import MPoly, Scalar, Variables, merge_variables


class RatFun:
    """A fraction num/den with gcd(num, den) = 1.

    The denominator is primitive with a positive leading coefficient so that two
    equal functions have structurally equal representations.
    """

    __slots__ = ("num", "den")

    num: MPoly
    den: MPoly

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = MPoly.constant(1, num.variables)
        if num.variables != den.variables:
            context = merge_variables(num.variables, den.variables)
            num, den = num.lift(context), den.lift(context)
        if den.is_zero:
            raise DivisionByZero(f"Denominator of {num}/(0) vanishes identically")
        if num.is_zero:
            den = MPoly.constant(1, num.variables)
        elif den.is_constant:
            num = num.scale(1 / den.constant_value)
            den = MPoly.constant(1, num.variables)
        else:
            common = num.gcd(den)
            if not common.is_constant:
                num, den = num.exquo(common), den.exquo(common)
            normal = den.primitive()
            num = num.scale(normal.sign_coefficient / den.sign_coefficient)
            den = normal
        self.num = num
        self.den = den

    # construction

    @classmethod
    def coerce(cls, value: Any) -> RatFun:
        """Promote scalars and polynomials."""
        if isinstance(value, RatFun):
            return value
        if isinstance(value, MPoly):
            return cls(value)
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls(MPoly.constant(value))
        raise TypeError(f"Cannot convert {type(value).__name__} to a rational function")

    @classmethod
    def var(cls, name: str, variables: Iterable[str] | None = None) -> RatFun:
        """A single variable."""
        return cls(MPoly.var(name, variables))

    @classmethod
    def constant(cls, value: Scalar, variables: Iterable[str] = ()) -> RatFun:
        """A constant function."""
        return cls(MPoly.constant(value, variables))

    # context

    @property
    def variables(self) -> Variables:
        """Ordered variable context."""
        return self.num.variables

    def used_variables(self) -> Variables:
        """Variables occurring in numerator or denominator."""
        used = set(self.num.used_variables()) | set(self.den.used_variables())
        return tuple(v for v in self.variables if v in used)

    def lift(self, variables: Iterable[str]) -> RatFun:
        """Re-express in a larger context."""
        context = tuple(variables)
        if context == self.variables:
            return self
        result = object.__new__(RatFun)
        result.num = self.num.lift(context)
        result.den = self.den.lift(context)
        return result

    def _coerce(self, other: Any) -> RatFun | None:
        try:
            return RatFun.coerce(other)
        except TypeError:
            return None

    # arithmetic

    def __add__(self, other: Any) -> RatFun:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.den == rhs.den:
            return RatFun(self.num + rhs.num, self.den)
        return RatFun(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)

    def __radd__(self, other: Any) -> RatFun:
        return self.__add__(other)

    def __neg__(self) -> RatFun:
        result = object.__new__(RatFun)
        result.num = -self.num
        result.den = self.den
        return result

    def __sub__(self, other: Any) -> RatFun:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> RatFun:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> RatFun:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return RatFun(self.num * rhs.num, self.den * rhs.den)

    def __rmul__(self, other: Any) -> RatFun:
        return self.__mul__(other)

    def __truediv__(self, other: Any) -> RatFun:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs.is_zero:
            raise DivisionByZero(f"Division of {self} by zero")
        return RatFun(self.num * rhs.den, self.den * rhs.num)

    def __rtruediv__(self, other: Any) -> RatFun:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __pow__(self, exponent: int) -> RatFun:
        if exponent >= 0:
            return RatFun(self.num**exponent, self.den**exponent)
        if self.is_zero:
            raise DivisionByZero("Negative power of zero")
        return RatFun(self.den ** (-exponent), self.num ** (-exponent))

    # comparison

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.num == rhs.num and self.den == rhs.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.num.is_zero

    @property
    def is_zero(self) -> bool:
        """True for the zero function."""
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        """True when the denominator is one."""
        return self.den.is_constant

    @property
    def is_constant(self) -> bool:
        """True for constants."""
        return self.num.is_constant and self.den.is_constant

    @property
    def constant_value(self) -> Fraction:
        """Value of a constant function."""
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value

    # calculus

    def diff(self, name: str) -> RatFun:
        """Partial derivative by the quotient rule."""
        dnum = self.num.diff(name)
        if self.den.is_constant:
            return RatFun(dnum, self.den)
        dden = self.den.diff(name)
        if dden.is_zero:
            return RatFun(dnum, self.den)
        return RatFun(dnum * self.den - self.num * dden, self.den * self.den)

    def substitute(self, bindings: Mapping[str, Any]) -> RatFun:
        """Compose with rational bindings."""
        num = self.num.substitute(bindings)
        if self.den.is_constant:
            return num / self.den.constant_value
        den = self.den.substitute(bindings)
        if den.is_zero:
            raise DivisionByZero(f"Denominator of {self} vanishes after substitution")
        return num / den

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        """Exact value at a rational point."""
        den = self.den.evaluate(point)
        if not den:
            raise DivisionByZero(f"{self} has a pole at {dict(point)}")
        return self.num.evaluate(point) / den

    # rendering

    def __str__(self) -> str:
        return render_ratfun(self)

    def __repr__(self) -> str:
        return f"RatFun({self}, {self.variables})"


def _single_power(p: MPoly) -> bool:
    terms = p.terms()
    if len(terms) != 1:
        return False
    monom, coeff = terms[0]
    return coeff == 1 and sum(1 for e in monom if e) == 1


def render_ratfun(f: RatFun) -> str:
    """Canonical text; the denominator is parenthesized unless it is one power."""
    if f.is_polynomial:
        return str(f.num)
    num = str(f.num) if len(f.num.terms()) == 1 else f"({f.num})"
    den = str(f.den) if _single_power(f.den) else f"({f.den})"
    return f"{num}/{den}"


def ratfun_arith(op: str, a: RatFun, b: RatFun) -> RatFun:
    """Exact field operation on two rational functions."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"Unknown rational function operation {op!r}")
