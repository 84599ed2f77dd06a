"""Riccati forms and the rational ansatz lambda = psi(u)."""

from __future__ import annotations

import logging
from fractions import Fraction

import sympy

from foliate.algebra.poly import MPoly, merge_variables
from foliate.algebra.ratfun import RatFun
from foliate.forms import DForm

LOG = logging.getLogger(__name__)

BASE = "x"
FIBER = "y"


def riccati_form(psi1: RatFun, psi2: RatFun | None = None) -> DForm:
    """dy - (y^2 + psi2(x)) psi1(x) dx on the product of two lines."""
    x = RatFun.var(BASE)
    y = RatFun.var(FIBER)
    second = psi2 if psi2 is not None else x
    return DForm.one_form({BASE: -(y * y + second) * psi1, FIBER: 1}, (BASE, FIBER))


def _columns(lam: RatFun, u: RatFun, degree: int) -> list[MPoly]:
    # P(u) ld - Q(u) ln = 0 cleared by ud^degree
    un, ud = u.num, u.den
    ln, ld = lam.num, lam.den
    columns = []
    for i in range(degree + 1):
        columns.append(un**i * ud ** (degree - i) * ld)
    for j in range(degree + 1):
        columns.append(-(un**j * ud ** (degree - j) * ln))
    return columns


def _solve(lam: RatFun, u: RatFun, degree: int, name: str) -> RatFun | None:
    columns = _columns(lam, u, degree)
    context: tuple[str, ...] = ()
    for column in columns:
        context = merge_variables(context, column.variables)
    lifted = [dict(column.lift(context).terms()) for column in columns]
    monomials = sorted({m for terms in lifted for m in terms})
    rows = []
    for monom in monomials:
        row = []
        for terms in lifted:
            coeff = terms.get(monom, Fraction(0))
            row.append(sympy.Rational(coeff.numerator, coeff.denominator))
        rows.append(row)
    if not rows:
        return None
    variable = RatFun.var(name)
    for vector in sympy.Matrix(rows).nullspace():
        values = [Fraction(str(sympy.Rational(entry))) for entry in vector]
        p, q = values[: degree + 1], values[degree + 1 :]
        if not any(q):
            continue
        numerator = sum((variable**i * c for i, c in enumerate(p)), RatFun.constant(0))
        denominator = sum(
            (variable**j * c for j, c in enumerate(q)), RatFun.constant(0)
        )
        psi = numerator / denominator
        if psi.substitute({name: u}) == lam:
            return psi
    return None


def rational_function_of(
    lam: RatFun, u: RatFun, max_degree: int, name: str = BASE
) -> RatFun | None:
    """psi with lam = psi(u), numerator and denominator of degree at most max_degree."""
    if u.is_constant:
        raise ValueError("The ansatz needs a nonconstant u")
    for degree in range(max_degree + 1):
        psi = _solve(lam, u, degree, name)
        if psi is not None:
            LOG.info("lambda = psi(u) with psi = %s (degree %d)", psi, degree)
            return psi
        LOG.debug("No solution of degree %d", degree)
    return None
