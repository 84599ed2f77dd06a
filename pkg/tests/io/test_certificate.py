"""Test certificate documents on disk."""

from fractions import Fraction
from pathlib import Path

import pytest
import yaml

from foliate.classifier import FORMAT_VERSION, classify
from foliate.exceptions import CertificateFormatError
from foliate.foliation import ChartPoint
from foliate.io.certificate import (
    certificate_document,
    dump_certificate,
    emit_certificate,
    load_certificate,
    read_certificate,
    transcript_of,
)

ORIGIN = ChartPoint(0, (Fraction(0),) * 3)


def test_emit_is_byte_identical(case3_projective, tmp_path: Path):
    """Emitting the same certificate twice gives the same bytes."""
    cert = classify(case3_projective, ORIGIN)
    first, second = tmp_path / "a.yaml", tmp_path / "b.yaml"
    emit_certificate(cert, first)
    emit_certificate(classify(case3_projective, ORIGIN), second)
    assert first.read_bytes() == second.read_bytes()


def test_read_back(case3_gvs, tmp_path: Path):
    """The document on disk validates to the same certificate."""
    cert = classify(case3_gvs, ORIGIN)
    path = tmp_path / "cert.yaml"
    written = emit_certificate(cert, path)
    document = read_certificate(path)
    assert document == written
    assert document.format_version == FORMAT_VERSION
    assert document.transcript.passed
    assert document.certificate.kind == "finite_gvs"


def test_transcript_lists_failures(case3_projective):
    """Failed checks end up in the transcript."""
    cert = classify(case3_projective, ORIGIN)
    broken = cert.checks[0].model_copy(update={"passed": False})
    transcript = transcript_of(cert.model_copy(update={"checks": [broken]}))
    assert not transcript.passed
    assert transcript.failed == [broken.name]


def test_field_order_is_stable(case3_affine):
    """format_version comes first and kind leads the certificate."""
    text = dump_certificate(certificate_document(classify(case3_affine, ORIGIN)))
    assert text.startswith("format_version: ")
    data = yaml.safe_load(text)
    assert list(data) == ["format_version", "certificate", "transcript"]


@pytest.mark.parametrize(
    "text",
    [
        "format_version: [\n",
        "- 1\n",
        "format_version: 99\ncertificate: {}\ntranscript: {passed: true}\n",
        "format_version: 1\ncertificate: {kind: unknown}\ntranscript: {passed: true}\n",
    ],
)
def test_invalid_certificates(text: str):
    """Malformed documents raise a format error."""
    with pytest.raises(CertificateFormatError):
        load_certificate(text)
