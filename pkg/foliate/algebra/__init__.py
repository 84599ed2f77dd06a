"""Exact arithmetic: polynomials, rational functions and quadratic covers."""

from .poly import MPoly, homogeneous_components, poly_factor, poly_gcd
from .quadratic import QuadCoverRing, QuadElement, quad_reduce
from .ratfun import RatFun

__all__ = [
    "MPoly",
    "RatFun",
    "QuadCoverRing",
    "QuadElement",
    "homogeneous_components",
    "poly_factor",
    "poly_gcd",
    "quad_reduce",
]
