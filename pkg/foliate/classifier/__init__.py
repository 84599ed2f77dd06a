"""Case dispatch, certificates and their independent verification."""

from .core import classify, parse_point_label, point_label, select_witness
from .darboux import find_integrating_factor
from .hints import Case4Hints
from .models import (
    FORMAT_VERSION,
    Affine,
    Case4NeedsData,
    Certificate,
    CertificateDocument,
    CertificateKind,
    FiniteGVS,
    FirstIntegralConditional,
    LinearPullback,
    PureProjective,
    RiccatiPullback,
    Transcript,
    VerificationReport,
)
from .registry import get_handler, register_handler, registered_cases
from .riccati import rational_function_of, riccati_form
from .verify import verify_certificate

__all__ = [
    "FORMAT_VERSION",
    "Affine",
    "Case4Hints",
    "Case4NeedsData",
    "Certificate",
    "CertificateDocument",
    "CertificateKind",
    "FiniteGVS",
    "FirstIntegralConditional",
    "LinearPullback",
    "PureProjective",
    "RiccatiPullback",
    "Transcript",
    "VerificationReport",
    "classify",
    "find_integrating_factor",
    "get_handler",
    "parse_point_label",
    "point_label",
    "rational_function_of",
    "register_handler",
    "registered_cases",
    "riccati_form",
    "select_witness",
    "verify_certificate",
]
