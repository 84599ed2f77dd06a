"""Godbillon-Vey sequences and transverse structure witnesses."""

from .divide import form_divide, polar_locus
from .fiber import FiberExpansion, fiber_expansion
from .gvs import GVSeq, extended_form, gvs_compute, gvs_triple, gvs_verify
from .structures import (
    AffineWitness,
    ProjectiveTriple,
    StructuralBetas,
    riccati_triple,
    structural_system_check,
    verify_affine,
    verify_projective,
)

__all__ = [
    "AffineWitness",
    "FiberExpansion",
    "GVSeq",
    "ProjectiveTriple",
    "StructuralBetas",
    "extended_form",
    "fiber_expansion",
    "form_divide",
    "gvs_compute",
    "gvs_triple",
    "gvs_verify",
    "polar_locus",
    "riccati_triple",
    "structural_system_check",
    "verify_affine",
    "verify_projective",
]
