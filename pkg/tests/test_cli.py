"""Test foliate cli functions."""

from pathlib import Path

import pytest
import yaml
from click.testing import CliRunner

from foliate import VERSION
from foliate.cli import cli

PENCIL = "2 z0 z1 z2 dz0 - z0^2 z2 dz1 - z0^2 z1 dz2"


def test_version():
    result = CliRunner().invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert VERSION in result.output


def test_degree_saturates_first(form_document):
    """z0 divides the pencil form, the saturated form has degree one."""
    path = form_document(PENCIL, variables="z0 z1 z2")
    result = CliRunner().invoke(cli, ["degree", str(path)])
    assert result.exit_code == 0
    assert result.stdout.strip() == "1"


def test_check_reports_witness(form_document):
    """A non integrable form exits with status 1 and prints the witness."""
    path = form_document("z dx + x dy + y dz", variables="x y z")
    result = CliRunner().invoke(cli, ["check", str(path)])
    assert result.exit_code == 1
    report = yaml.safe_load(result.stdout)
    assert report["integrable"] is False
    assert report["witness"]


def test_cases_table():
    result = CliRunner().invoke(cli, ["cases"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert [line.split("\t")[0] for line in lines] == [f"Case{i}" for i in range(1, 8)]


def test_jet_at_document_point(form_document, case3_projective):
    path = form_document(case3_projective, point="0,0,0")
    result = CliRunner().invoke(cli, ["jet", str(path)])
    assert result.exit_code == 0
    assert int(result.stdout) >= 2


def test_classify_and_verify(form_document, case3_projective, tmp_path: Path):
    """A certificate written by classify passes verify on the same document."""
    document = form_document(case3_projective, point="0,0,0")
    certificate = tmp_path / "cert.yaml"
    runner = CliRunner()
    result = runner.invoke(
        cli, ["classify", "--emit", str(certificate), str(document)]
    )
    assert result.exit_code == 0
    assert certificate.is_file()
    data = yaml.safe_load(certificate.read_text(encoding="utf-8"))
    assert data["certificate"]["kind"] == "pure_projective"
    assert data["transcript"]["passed"] is True

    result = runner.invoke(cli, ["verify", str(certificate), str(document)])
    assert result.exit_code == 0
    assert "FAILED" not in result.output
    assert "ok\tomega2 != 0" in result.output


def test_classify_prints_certificate(form_document, case3_gvs):
    document = form_document(case3_gvs, point="0,0,0")
    result = CliRunner().invoke(cli, ["classify", str(document)])
    assert result.exit_code == 0
    data = yaml.safe_load(result.stdout)
    assert data["certificate"]["kind"] == "finite_gvs"


def test_verify_against_other_foliation(
    form_document, case3_projective, case3_affine, tmp_path: Path
):
    """A certificate does not verify for another foliation."""
    certificate = tmp_path / "cert.yaml"
    runner = CliRunner()
    first = form_document(case3_projective, name="a.yaml", point="0,0,0")
    other = form_document(case3_affine, name="b.yaml", point="0,0,0")
    runner.invoke(cli, ["classify", "-e", str(certificate), str(first)])
    result = runner.invoke(cli, ["verify", str(certificate), str(other)])
    assert result.exit_code == 1
    assert "FAILED\teta = recomputed strict transform" in result.output


@pytest.mark.parametrize(
    "args",
    [
        ["jet", "--chart", "x"],
        ["classify", "--point", "1/0"],
        ["classify", "--hint-exponent", "x"],
    ],
)
def test_usage_errors(form_document, case3_projective, args: list[str]):
    """Bad option values exit with status 2."""
    path = form_document(case3_projective)
    result = CliRunner().invoke(cli, [*args, str(path)])
    assert result.exit_code == 2


def test_malformed_document(tmp_path: Path):
    """Syntax errors exit with status 2 and show the position."""
    path = tmp_path / "form.yaml"
    path.write_text("vars: x y\nform: x dx + q dy\n", encoding="utf-8")
    result = CliRunner().invoke(cli, ["degree", str(path)])
    assert result.exit_code == 2
    assert "line 2, column 14" in result.output


def test_missing_point(form_document, case3_projective):
    """jet needs a point when the document has none."""
    path = form_document(case3_projective)
    result = CliRunner().invoke(cli, ["jet", str(path)])
    assert result.exit_code == 2
