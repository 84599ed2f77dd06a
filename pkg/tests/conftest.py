"""Test fixtures."""

import random
from pathlib import Path
from typing import Callable

import pytest

from foliate.algebra import RatFun
from foliate.blowup import BlowupChartData
from foliate.classifier.registry import _HANDLER_REGISTRY
from foliate.forms import DForm, differential
from foliate.foliation import Foliation, homogenize
from foliate.io.formtext import parse_coefficient, parse_form

HOMOGENEOUS = ("z0", "z1", "z2", "z3")
AFFINE = ("z1", "z2", "z3")
TAU = ("tau1", "tau2")


def affine_foliation(text: str) -> Foliation:
    """Foliation of P^3 whose chart z0 = 1 carries the given form."""
    omega_e = parse_form(text, AFFINE)
    return Foliation.from_form(
        homogenize(omega_e, 0, HOMOGENEOUS), variables=HOMOGENEOUS
    )


def chart_data(
    theta: dict[int, str] | None = None, f: dict[int, str] | None = None
) -> BlowupChartData:
    """Blow-up chart data on P^3 from text."""
    return BlowupChartData(
        3,
        TAU,
        {j: parse_form(text, TAU) for j, text in (theta or {}).items()},
        {j: parse_coefficient(text, TAU) for j, text in (f or {}).items()},
    )


@pytest.fixture()
def make_chart() -> Callable[..., BlowupChartData]:
    """Factory for chart data."""
    return chart_data


@pytest.fixture()
def make_foliation() -> Callable[[str], Foliation]:
    """Factory for foliations given by their chart z0 = 1 form."""
    return affine_foliation


@pytest.fixture()
def rng() -> random.Random:
    """Seeded generator for randomized identities."""
    return random.Random(20240531)


@pytest.fixture()
def random_ratfun(rng: random.Random) -> Callable[..., RatFun]:
    """Random fractions of low degree polynomials with small integer coefficients.

    ``fraction=False`` gives the numerator alone.
    """

    def poly(variables: tuple[str, ...], degree: int, terms: int) -> RatFun:
        value = RatFun.constant(rng.randint(-3, 3))
        for _ in range(terms):
            term = RatFun.constant(rng.choice([-2, -1, 1, 2, 3]))
            for _ in range(rng.randint(1, degree)):
                term = term * RatFun.var(rng.choice(variables))
            value = value + term
        return value

    def make(
        variables: tuple[str, ...],
        degree: int = 2,
        terms: int = 3,
        fraction: bool = True,
    ) -> RatFun:
        num = poly(variables, degree, terms)
        if not fraction:
            return num
        den = poly(variables, 1, 2)
        while den.is_zero or den.is_constant:
            den = poly(variables, 1, 2)
        return num / den

    return make


@pytest.fixture()
def case1_foliation() -> Foliation:
    """Q dP - P dQ with P = z1 z2 z3 and Q = z1^3 + z2^3 + z3^3."""
    p = parse_coefficient("z1 z2 z3", AFFINE)
    q = parse_coefficient("z1^3 + z2^3 + z3^3", AFFINE)
    omega_e = differential(p, AFFINE) * q - differential(q, AFFINE) * p
    omega_e = DForm(1, omega_e.components, AFFINE)
    return Foliation.from_form(
        homogenize(omega_e, 0, HOMOGENEOUS), variables=HOMOGENEOUS
    )


@pytest.fixture()
def case3_projective() -> Foliation:
    """Case 3 with a pure projective structure."""
    return affine_foliation("(z1^4 + z2^5) dz1 - z1 z2^4 dz2")


@pytest.fixture()
def case3_affine() -> Foliation:
    """Case 3 with an affine structure."""
    return affine_foliation("(z1^4 + z2^3) dz1 - z1 z2^2 dz2")


@pytest.fixture()
def case3_gvs() -> Foliation:
    """Case 3 with a G-V-S of length three."""
    return affine_foliation("(z2^2 + z1^4) dz1 - z1 z2 dz2")


@pytest.fixture()
def case2_gvs() -> Foliation:
    """Case 2 with a G-V-S of length four."""
    return affine_foliation("(z3^2 + z1^4 z3) dz1 + (z1^2 - z1^5) dz3")


@pytest.fixture()
def case4_gvs() -> Foliation:
    """Case 4 without a quadratic part and a G-V-S of length three."""
    return affine_foliation("(z3^3 + z3^4) dz1 + (z1^3 + z1^4) dz3")


@pytest.fixture()
def case5_projective() -> Foliation:
    """Case 5 ending in ds + tau1 (1 + 3s + 2s^2) dtau1 on t^2 = -2s."""
    return affine_foliation(
        "(2 z1 z3 + 9 z1 z3^2 + 8 z1 z3^3 + 2 z1 z3^4) dz1"
        " + (2 z3^2 + 2 z3^3 - 2 z1^2 - 9 z1^2 z3 - 8 z1^2 z3^2 - 2 z1^2 z3^3) dz3"
    )


@pytest.fixture()
def case6_affine() -> Foliation:
    """Case 6 with the integrating factor z1^2 z3^2 (1 + z1^2)(1 + z3^2)."""
    return affine_foliation("(z3^2 + z3^4) dz1 + (z1^2 + z1^4) dz3")


@pytest.fixture()
def case7_affine() -> Foliation:
    """Case 7 with a separable form."""
    return affine_foliation("(z3^2 + z3^3 + z3^4) dz1 + (z1^2 + z1^3 + z1^4) dz3")


@pytest.fixture()
def form_document(tmp_path: Path) -> Callable[..., Path]:
    """Write a form document and return its path."""

    def write(
        foliation_or_text: Foliation | str,
        variables: str = " ".join(HOMOGENEOUS),
        name: str = "form.yaml",
        **extra: object,
    ) -> Path:
        form = foliation_or_text
        if isinstance(form, Foliation):
            form = str(form.omega)
        lines = [f"vars: {variables}", f'form: "{form}"']
        lines += [f"{key}: {value}" for key, value in extra.items()]
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    return write


@pytest.fixture()
def restore_handler_registry():
    """Snapshot the handler registry and restore it after the test."""
    saved = dict(_HANDLER_REGISTRY)
    yield _HANDLER_REGISTRY
    _HANDLER_REGISTRY.clear()
    _HANDLER_REGISTRY.update(saved)
