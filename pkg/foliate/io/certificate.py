"""Certificates on disk: a versioned YAML document with a transcript."""

from __future__ import annotations

import logging
from pathlib import Path

import yaml
from pydantic import ValidationError

from foliate.classifier.models import (
    FORMAT_VERSION,
    Certificate,
    CertificateDocument,
    LinearPullback,
    Transcript,
)
from foliate.exceptions import CertificateFormatError

from .types import Pathish, StreamOrPath
from .utils import read_text

LOG = logging.getLogger(__name__)


def failed_checks(cert: Certificate, prefix: str = "") -> list[str]:
    """Names of failed checks, nested targets included."""
    failed = [prefix + check.name for check in cert.checks if not check.passed]
    if isinstance(cert, LinearPullback) and cert.target is not None:
        failed += failed_checks(cert.target, prefix + "target: ")
    return failed


def transcript_of(cert: Certificate) -> Transcript:
    """Summary of the checks recorded at construction."""
    failed = failed_checks(cert)
    return Transcript(passed=not failed, failed=failed)


def certificate_document(cert: Certificate) -> CertificateDocument:
    """Wrap a certificate with its format version and transcript."""
    return CertificateDocument(
        format_version=FORMAT_VERSION, certificate=cert, transcript=transcript_of(cert)
    )


def dump_certificate(document: CertificateDocument) -> str:
    """YAML text with the field order of the models."""
    return yaml.safe_dump(
        document.model_dump(mode="json"),
        sort_keys=False,
        default_flow_style=False,
        allow_unicode=True,
        width=1000,
    )


def emit_certificate(cert: Certificate, path: Pathish) -> CertificateDocument:
    """Write a certificate document; identical certificates give identical bytes."""
    document = certificate_document(cert)
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as out:
        out.write(dump_certificate(document))
    LOG.info("Wrote %s certificate to %s", cert.kind, path)
    return document


def load_certificate(text: str) -> CertificateDocument:
    """Validate a certificate document from its text."""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise CertificateFormatError(f"Certificate is not valid YAML: {exc}") from exc
    if not isinstance(data, dict):
        raise CertificateFormatError("Certificate document must be a mapping")
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise CertificateFormatError(
            f"Unsupported certificate format {version}, expected {FORMAT_VERSION}",
            context={"format_version": version},
        )
    try:
        return CertificateDocument.model_validate(data)
    except ValidationError as exc:
        raise CertificateFormatError(f"Invalid certificate: {exc}") from exc


def read_certificate(source: StreamOrPath) -> CertificateDocument:
    """Read a certificate document from a path or stream."""
    return load_certificate(read_text(source))
