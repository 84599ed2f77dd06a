"""Integrating factors of a 1-form: trivial, user hint, Darboux products.

The bounded search tries integer powers of the coefficient factors one by one;
the logarithmic witness solves for rational exponents in one linear system.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import sympy

from foliate.algebra.poly import MPoly, merge_variables
from foliate.algebra.ratfun import RatFun
from foliate.config import DEFAULT_SETTINGS, Settings
from foliate.forms import DForm, differential
from foliate.transverse import AffineWitness

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class FactorSearch:
    """Outcome of the search and how many candidates were tried."""

    factor: RatFun | None
    source: str
    tried: int


def is_integrating_factor(form: DForm, factor: RatFun) -> bool:
    """d(form / factor) = 0."""
    if factor.is_zero:
        return False
    return (form / factor).d().is_zero


def coefficient_factors(form: DForm) -> list[MPoly]:
    """Irreducible factors of all coefficient numerators and denominators."""
    found: dict[str, MPoly] = {}
    for _, coeff in form.items():
        if not isinstance(coeff, RatFun):
            raise ValueError("Integrating factors are searched on the base ring only")
        for part in (coeff.num, coeff.den):
            if part.is_constant:
                continue
            _, factors = part.factor()
            for factor, _mult in factors:
                found.setdefault(str(factor), factor)
    return sorted(found.values(), key=lambda p: (p.total_degree, str(p)))


def darboux_candidates(
    factors: Sequence[MPoly], max_exponent: int, max_factors: int
) -> Iterator[RatFun]:
    """Products of factor powers with exponents in [-e, e].

    Candidates come with the fewest total exponent first.
    """
    base = list(factors[:max_factors])
    exponents = range(-max_exponent, max_exponent + 1)
    vectors = [v for v in itertools.product(exponents, repeat=len(base)) if any(v)]
    vectors.sort(key=lambda v: (sum(abs(e) for e in v), tuple(-e for e in v)))
    for vector in vectors:
        product = RatFun.constant(1)
        for factor, exponent in zip(base, vector):
            if exponent:
                product = product * RatFun(factor) ** exponent
        yield product


def find_integrating_factor(
    form: DForm,
    *,
    hint: RatFun | None = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> FactorSearch:
    """Try 1, then the hint, then the Darboux products."""
    tried = 1
    if is_integrating_factor(form, RatFun.constant(1)):
        LOG.info("The form is closed")
        return FactorSearch(RatFun.constant(1), "closed", tried)
    if hint is not None:
        tried += 1
        if is_integrating_factor(form, hint):
            LOG.info("Hint %s is an integrating factor", hint)
            return FactorSearch(hint, "hint", tried)
        LOG.warning("Hint %s is not an integrating factor of %s", hint, form)
    factors = coefficient_factors(form)
    LOG.debug("Darboux search over the factors %s", [str(f) for f in factors])
    for candidate in darboux_candidates(
        factors, settings.darboux_max_exponent, settings.darboux_max_factors
    ):
        tried += 1
        if is_integrating_factor(form, candidate):
            LOG.info("Integrating factor %s after %d candidates", candidate, tried)
            return FactorSearch(candidate, "darboux", tried)
    LOG.info("No integrating factor among %d candidates", tried)
    return FactorSearch(None, "", tried)


def _lcm(first: MPoly, second: MPoly) -> MPoly:
    return (first * second).exquo(first.gcd(second))


def _rows(
    columns: Sequence[DForm], target: DForm
) -> tuple[list[list[Fraction]], list[Fraction]]:
    """sum e_i columns_i = target, coefficient by coefficient."""
    keys = {key for form in [target, *columns] for key, _ in form.items()}
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for key in sorted(keys):
        coeffs = [RatFun.coerce(form.components.get(key, 0)) for form in columns]
        goal = RatFun.coerce(target.components.get(key, 0))
        den = MPoly.constant(1)
        for coeff in [goal, *coeffs]:
            den = _lcm(den, coeff.den)
        scaled = [(coeff * RatFun(den)).num for coeff in [goal, *coeffs]]
        context: tuple[str, ...] = ()
        for poly in scaled:
            context = merge_variables(context, poly.variables)
        terms = [dict(poly.lift(context).terms()) for poly in scaled]
        for monom in sorted({m for t in terms for m in t}):
            rhs.append(terms[0].get(monom, Fraction(0)))
            rows.append([t.get(monom, Fraction(0)) for t in terms[1:]])
    return rows, rhs


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    if not rows:
        return None
    matrix = sympy.Matrix(
        [[sympy.Rational(c.numerator, c.denominator) for c in row] for row in rows]
    )
    vector = sympy.Matrix([sympy.Rational(c.numerator, c.denominator) for c in rhs])
    try:
        solution, params = matrix.gauss_jordan_solve(vector)
    except ValueError:
        return None
    solution = solution.subs({p: 0 for p in params})
    return [Fraction(str(sympy.Rational(entry))) for entry in solution]


def logarithmic_witness(
    form: DForm, factors: Sequence[MPoly]
) -> AffineWitness | None:
    """omega1 = -sum e_i df_i/f_i with d(form) = form ^ omega1.

    The condition is linear in the exponents, which may be any rationals.
    """
    if not factors:
        return None
    logs = [differential(RatFun(f), form.variables) / RatFun(f) for f in factors]
    columns = [form.wedge(log) for log in logs]
    exponents = _solve(*_rows(columns, -form.d()))
    if exponents is None:
        LOG.info("No logarithmic affine structure over %d factors", len(factors))
        return None
    omega1 = DForm.zero(1, form.variables)
    for exponent, log in zip(exponents, logs):
        if exponent:
            omega1 = omega1 - log * exponent
    witness = AffineWitness(form, omega1)
    if not all(witness.checks()):
        return None
    LOG.info("Logarithmic affine structure with exponents %s", exponents)
    return witness
