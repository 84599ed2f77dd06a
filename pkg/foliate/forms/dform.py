"""Differential forms with rational or quadratic-cover coefficients."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Mapping, TypeAlias

from foliate.algebra.poly import MPoly, Variables, merge_variables
from foliate.algebra.quadratic import QuadCoverRing, QuadElement
from foliate.algebra.ratfun import RatFun
from foliate.exceptions import ArityError, IncompatibleRings

from .vfield import VField

LOG = logging.getLogger(__name__)

MAX_ARITY = 3

Coeff: TypeAlias = RatFun | QuadElement
Basis: TypeAlias = tuple[str, ...]
Components: TypeAlias = Mapping[Basis, Any] | Iterable[tuple[Basis, Any]]


def coeff_variables(coeff: Coeff) -> Variables:
    """Variables a coefficient depends on."""
    return coeff.used_variables()


def unify_rings(
    first: QuadCoverRing | None, second: QuadCoverRing | None
) -> QuadCoverRing | None:
    """The common coefficient ring of two forms."""
    if first is None:
        return second
    if second is None or first == second:
        return first
    raise IncompatibleRings(
        f"Forms over the covers {first} and {second} cannot be mixed"
    )


def as_coeff(value: Any, ring: QuadCoverRing | None) -> Coeff:
    """Coerce a value into the coefficient ring."""
    if isinstance(value, QuadElement):
        if ring is None or value.ring != ring:
            raise IncompatibleRings(
                f"Coefficient of {value.ring} in a form over {ring}"
            )
        return value
    func = RatFun.coerce(value)
    if ring is None:
        return func
    return ring.element(func)


def _canonical(key: Basis, positions: Mapping[str, int]) -> tuple[int, Basis]:
    if len(set(key)) < len(key):
        return 0, ()
    idx = [positions[name] for name in key]
    sign = 1
    for i, left in enumerate(idx):
        for right in idx[i + 1 :]:
            if left > right:
                sign = -sign
    return sign, tuple(sorted(key, key=positions.__getitem__))


class DForm:
    """A k-form; components are keyed by increasing basis tuples of names."""

    __slots__ = ("arity", "variables", "components", "ring")

    arity: int
    variables: Variables
    components: dict[Basis, Coeff]
    ring: QuadCoverRing | None

    def __init__(
        self,
        arity: int,
        components: Components | None = None,
        variables: Iterable[str] = (),
        ring: QuadCoverRing | None = None,
    ):
        if arity < 0:
            raise ArityError(f"Negative form arity {arity}")
        pairs = list(
            components.items() if isinstance(components, Mapping) else components or []
        )
        for _, value in pairs:
            if isinstance(value, QuadElement):
                ring = unify_rings(ring, value.ring)
        context = tuple(variables)
        coeffs: list[tuple[Basis, Coeff]] = []
        for key, value in pairs:
            key = tuple(key)
            if len(key) != arity:
                raise ValueError(f"Basis {key} does not match arity {arity}")
            coeff = as_coeff(value, ring)
            context = merge_variables(context, key)
            context = merge_variables(context, coeff_variables(coeff))
            coeffs.append((key, coeff))
        if ring is not None:
            context = merge_variables(context, ring.relation.used_variables())
            if ring.generator in context:
                raise ValueError(
                    f"Cover generator {ring.generator} cannot be a form coordinate"
                )
        positions = {name: pos for pos, name in enumerate(context)}
        store: dict[Basis, Coeff] = {}
        for key, coeff in coeffs:
            if coeff.is_zero:
                continue
            sign, ordered = _canonical(key, positions)
            if not sign:
                continue
            signed = coeff if sign > 0 else -coeff
            store[ordered] = store[ordered] + signed if ordered in store else signed
        store = {
            key: store[key]
            for key in sorted(store, key=lambda k: [positions[n] for n in k])
            if not store[key].is_zero
        }
        if arity > MAX_ARITY and store:
            raise ArityError(f"Forms of arity {arity} are not supported")
        self.arity = arity
        self.variables = context
        self.components = store
        self.ring = ring

    # construction

    @classmethod
    def zero(
        cls,
        arity: int,
        variables: Iterable[str] = (),
        ring: QuadCoverRing | None = None,
    ) -> DForm:
        """The zero k-form."""
        return cls(arity, {}, variables, ring)

    @classmethod
    def function(
        cls,
        value: Any,
        variables: Iterable[str] = (),
        ring: QuadCoverRing | None = None,
    ) -> DForm:
        """A 0-form."""
        return cls(0, [((), value)], variables, ring)

    @classmethod
    def differential(cls, name: str, variables: Iterable[str] = ()) -> DForm:
        """The 1-form d<name>."""
        return cls(1, [((name,), 1)], variables)

    @classmethod
    def one_form(
        cls,
        coefficients: Mapping[str, Any],
        variables: Iterable[str] = (),
        ring: QuadCoverRing | None = None,
    ) -> DForm:
        """A 1-form from a map variable -> coefficient."""
        components = [((name,), c) for name, c in coefficients.items()]
        return cls(1, components, variables, ring)

    # inspection

    @property
    def is_zero(self) -> bool:
        """True when no component survives."""
        return not self.components

    def zero_coeff(self) -> Coeff:
        """Zero of the coefficient ring."""
        return as_coeff(0, self.ring)

    def coefficient(self, *names: str) -> Coeff:
        """Coefficient of d<names[0]>^...^d<names[k-1]>."""
        if len(names) != self.arity:
            raise ValueError(f"Basis {names} does not match arity {self.arity}")
        positions = {n: i for i, n in enumerate(merge_variables(self.variables, names))}
        sign, key = _canonical(tuple(names), positions)
        if not sign or key not in self.components:
            return self.zero_coeff()
        value = self.components[key]
        return value if sign > 0 else -value

    def items(self) -> Iterator[tuple[Basis, Coeff]]:
        """Components in canonical order."""
        return iter(self.components.items())

    def used_variables(self) -> Variables:
        """Variables in coefficients or in the basis."""
        used: set[str] = set()
        for key, coeff in self.components.items():
            used.update(key)
            used.update(coeff_variables(coeff))
        return tuple(v for v in self.variables if v in used)

    def is_polynomial(self) -> bool:
        """True when every coefficient is a polynomial of the base ring."""
        return self.ring is None and all(
            c.is_polynomial  # type: ignore[union-attr]
            for c in self.components.values()
        )

    # arithmetic

    def _check_arity(self, other: DForm) -> None:
        if self.arity != other.arity:
            raise ArityError(
                f"Cannot add forms of arity {self.arity} and {other.arity}"
            )

    def __add__(self, other: Any) -> DForm:
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, DForm):
            return NotImplemented
        self._check_arity(other)
        ring = unify_rings(self.ring, other.ring)
        pairs = list(self.components.items()) + list(other.components.items())
        return DForm(
            self.arity, pairs, merge_variables(self.variables, other.variables), ring
        )

    def __radd__(self, other: Any) -> DForm:
        return self.__add__(other)

    def __neg__(self) -> DForm:
        return DForm(
            self.arity,
            [(k, -c) for k, c in self.components.items()],
            self.variables,
            self.ring,
        )

    def __sub__(self, other: Any) -> DForm:
        if not isinstance(other, DForm):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Any) -> DForm:
        """Multiply every coefficient by a function."""
        ring = self.ring
        if isinstance(factor, QuadElement):
            ring = unify_rings(ring, factor.ring)
        if ring is not None and not isinstance(factor, QuadElement):
            factor = as_coeff(factor, ring)
        pairs = []
        for key, coeff in self.components.items():
            if ring is not None and not isinstance(coeff, QuadElement):
                coeff = as_coeff(coeff, ring)
            pairs.append((key, coeff * factor))
        return DForm(self.arity, pairs, self.variables, ring)

    def __mul__(self, other: Any) -> DForm:
        if isinstance(other, DForm):
            return NotImplemented
        if isinstance(other, (RatFun, QuadElement, MPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Any) -> DForm:
        return self.__mul__(other)

    def __truediv__(self, other: Any) -> DForm:
        if isinstance(other, QuadElement):
            return self.scale(other.inverse())
        return self.scale(1 / RatFun.coerce(other))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero
        if not isinstance(other, DForm):
            return NotImplemented
        if self.arity != other.arity:
            return False
        try:
            return (self - other).is_zero
        except IncompatibleRings:
            return False

    __hash__ = None  # type: ignore[assignment]

    # exterior calculus

    def wedge(self, other: DForm) -> DForm:
        """Exterior product."""
        ring = unify_rings(self.ring, other.ring)
        pairs = []
        for left_key, left in self.components.items():
            for right_key, right in other.components.items():
                if set(left_key) & set(right_key):
                    continue
                pairs.append((left_key + right_key, _mul(left, right, ring)))
        return DForm(
            self.arity + other.arity,
            pairs,
            merge_variables(self.variables, other.variables),
            ring,
        )

    def d(self) -> DForm:
        """Exterior derivative."""
        pairs = []
        for key, coeff in self.components.items():
            for name in coeff_variables(coeff):
                partial = coeff.diff(name)
                if not partial.is_zero:
                    pairs.append(((name,) + key, partial))
        return DForm(self.arity + 1, pairs, self.variables, self.ring)

    def interior(self, field: VField) -> DForm:
        """Interior product i_X."""
        if self.arity == 0:
            raise ArityError("Interior product of a 0-form")
        pairs = []
        for key, coeff in self.components.items():
            for pos, name in enumerate(key):
                value = field.component(name)
                if value.is_zero:
                    continue
                term = _mul(coeff, value, self.ring)
                signed = term if pos % 2 == 0 else -term
                pairs.append((key[:pos] + key[pos + 1 :], signed))
        context = merge_variables(self.variables, field.variables)
        return DForm(self.arity - 1, pairs, context, self.ring)

    def lie(self, field: VField) -> DForm:
        """Lie derivative by the Cartan formula."""
        if self.arity == 0:
            return self.d().interior(field)
        return self.interior(field).d() + self.d().interior(field)

    def contract(self, field: VField) -> Coeff:
        """i_X of a 1-form as a function."""
        if self.arity != 1:
            raise ArityError(
                f"Contraction to a function needs a 1-form, got arity {self.arity}"
            )
        result = self.interior(field)
        return result.coefficient() if not result.is_zero else self.zero_coeff()

    # coefficient manipulation

    def map_coefficients(
        self, func: Callable[[Coeff], Any], ring: QuadCoverRing | None = None
    ) -> DForm:
        """Apply a function to every coefficient."""
        return DForm(
            self.arity,
            [(k, func(c)) for k, c in self.components.items()],
            self.variables,
            ring,
        )

    def substitute(self, bindings: Mapping[str, Any]) -> DForm:
        """Substitute into the coefficients only, the basis is left untouched."""
        ring = self.ring.substitute(bindings) if self.ring is not None else None
        pairs = []
        for key, coeff in self.components.items():
            if isinstance(coeff, QuadElement):
                pairs.append((key, coeff.substitute(bindings, ring)))
            else:
                pairs.append((key, coeff.substitute(bindings)))
        return DForm(self.arity, pairs, self.variables, ring)

    def drop(self, name: str) -> DForm:
        """The part of the form without d<name>."""
        return DForm(
            self.arity,
            [(k, c) for k, c in self.components.items() if name not in k],
            self.variables,
            self.ring,
        )

    def split_powers(self, fiber: str) -> dict[int, DForm]:
        """Write the form as sum fiber^k * form_k with fiber-free form_k.

        Coefficient denominators must be free of the fiber variable. The basis
        element d<fiber> is kept as it is.
        """
        parts: dict[int, list[tuple[Basis, Coeff]]] = {}
        for key, coeff in self.components.items():
            for power, piece in split_coefficient(coeff, fiber).items():
                parts.setdefault(power, []).append((key, piece))
        return {
            power: DForm(self.arity, parts[power], self.variables, self.ring)
            for power in sorted(parts)
        }

    def __str__(self) -> str:
        return render_form(self)

    def __repr__(self) -> str:
        return f"DForm({self})"


def _mul(left: Coeff, right: Coeff, ring: QuadCoverRing | None) -> Coeff:
    if ring is not None:
        return as_coeff(left, ring) * as_coeff(right, ring)
    return left * right


def _split_ratfun(func: RatFun, fiber: str) -> dict[int, RatFun]:
    if fiber in func.den.used_variables():
        raise ValueError(f"Denominator of {func} depends on {fiber}")
    den = RatFun(func.den)
    return {
        power: RatFun(coeff) / den
        for power, coeff in func.num.coefficients_in(fiber).items()
        if not coeff.is_zero
    }


def split_coefficient(coeff: Coeff, fiber: str) -> dict[int, Coeff]:
    """Powers of the fiber variable in a coefficient."""
    if isinstance(coeff, RatFun):
        return _split_ratfun(coeff, fiber)
    if fiber in coeff.ring.relation.used_variables():
        raise ValueError(f"Cover relation {coeff.ring} depends on the fiber {fiber}")
    even = _split_ratfun(coeff.a, fiber)
    odd = _split_ratfun(coeff.b, fiber)
    zero = RatFun.constant(0)
    return {
        power: coeff.ring.element(even.get(power, zero), odd.get(power, zero))
        for power in sorted(set(even) | set(odd))
    }


def differential(func: Coeff, variables: Iterable[str] = ()) -> DForm:
    """df of a function."""
    return DForm.function(func, variables, getattr(func, "ring", None)).d()


def wedge(a: DForm, b: DForm) -> DForm:
    """Exterior product."""
    return a.wedge(b)


def exterior_derivative(a: DForm) -> DForm:
    """d of a form."""
    return a.d()


def interior_product(field: VField, a: DForm) -> DForm:
    """i_X of a form."""
    return a.interior(field)


def lie_derivative(field: VField, a: DForm) -> DForm:
    """L_X of a form."""
    return a.lie(field)


# rendering


def _coeff_sign_body(coeff: Coeff) -> tuple[str, str]:
    if isinstance(coeff, RatFun):
        terms = coeff.num.terms()
        if len(terms) == 1 and terms[0][1] < 0:
            sign, body = "-", -coeff
        else:
            sign, body = "+", coeff
        if body == 1:
            return sign, ""
        text = str(body)
        return sign, text if len(body.num.terms()) == 1 else f"({text})"
    if coeff == 1:
        return "+", ""
    return "+", f"({coeff})"


def render_form(form: DForm) -> str:
    """Canonical text: `<coeff> d<var>` terms, wedges as `d<u>^d<v>`."""
    if form.is_zero:
        return "0"
    if form.arity == 0:
        return str(form.coefficient())
    out = []
    for pos, (key, coeff) in enumerate(form.items()):
        sign, body = _coeff_sign_body(coeff)
        basis = "^".join(f"d{name}" for name in key)
        term = f"{body} {basis}" if body else basis
        if pos == 0:
            out.append(f"-{term}" if sign == "-" else term)
        else:
            out.append(f" {sign} {term}")
    return "".join(out)
