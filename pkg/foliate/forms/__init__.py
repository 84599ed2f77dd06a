"""Exterior calculus over rational functions and quadratic covers."""

from .check import Check, all_passed
from .cover import cover_pullback, descend
from .dform import (
    Coeff,
    DForm,
    differential,
    exterior_derivative,
    interior_product,
    lie_derivative,
    wedge,
)
from .maps import RationalMap, jacobian_determinant, pullback
from .vfield import VField

__all__ = [
    "Check",
    "all_passed",
    "Coeff",
    "DForm",
    "RationalMap",
    "VField",
    "cover_pullback",
    "descend",
    "differential",
    "exterior_derivative",
    "interior_product",
    "jacobian_determinant",
    "lie_derivative",
    "pullback",
    "wedge",
]
