"""Tests for the command-line front end: file parsing, reports,
deterministic machine output, and error exit codes."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from hodgekit.cli import main

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def run_cli(args, hashseed="0"):
    env = dict(os.environ, PYTHONHASHSEED=hashseed)
    proc = subprocess.run([sys.executable, "-m", "hodgekit.cli", *args],
                          capture_output=True, env=env)
    return proc.returncode, proc.stdout


def run_inproc(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_classify_gaussian(capsys):
    code, out = run_inproc(["classify", str(CORPUS / "qi_period.json"),
                            "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    section = doc["sections"]["endomorphism_field"]
    assert doc["sections"]["transcendental_lattice"]["dim_t"] == 2
    assert section["e"] == 2
    assert section["classification"] == "CM"
    assert section["mt_family"] == "U_E"
    assert section["mt_rank"] == 1
    assert section["hodge_classes_dim"] == 2
    assert section["dim_fixed_subalgebra"] == 1


def test_classify_sqrt2i(capsys):
    code, out = run_inproc(["classify", str(CORPUS / "sqrt2i_period.json"),
                            "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    section = doc["sections"]["endomorphism_field"]
    assert doc["sections"]["transcendental_lattice"]["dim_t"] == 3
    assert section["e"] == 1
    assert section["classification"] == "TotallyReal"
    assert section["mt_family"] == "SO_E"
    assert section["mt_rank"] == 3
    assert section["hodge_classes_dim"] == 1


def test_tha_dims(capsys):
    code, out = run_inproc(["tha", str(CORPUS / "qi_period.json"),
                            "--n", "3", "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["sections"]["transcendental_hodge_algebra"]["graded_dims_q"] == \
        [2, 2, 2, 2]
    code, out = run_inproc(["tha", str(CORPUS / "sqrt2i_period.json"),
                            "--n", "2", "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["sections"]["transcendental_hodge_algebra"]["graded_dims_q"] == \
        [1, 3, 5]


def test_tha_rejects_n_zero():
    code, _ = run_cli(["tha", str(CORPUS / "qi_period.json"), "--n", "0"])
    assert code == 2


def test_ksympl_quaternion(capsys):
    code, out = run_inproc(["ksympl", str(CORPUS / "quaternion3.json"),
                            "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    ver = doc["sections"]["verification"]
    assert ver["quadric"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    assert ver["rank_on_quadric"] == 2
    assert doc["sections"]["clifford"]["operator_squares"] == ["-1", "-1"]
    assert doc["sections"]["divisibility"] == {"bound": 2, "divides": True}


def test_ksympl_doubled(capsys):
    code, out = run_inproc(["ksympl", str(CORPUS / "quaternion3_doubled.json"),
                            "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["sections"]["verification"]["rank_on_quadric"] == 4


def test_bounds(capsys):
    code, out = run_inproc(["bounds", "--d", "20", "--e", "1", "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["sections"]["torus"]["torus_bound"] == 1024
    assert doc["sections"]["subvariety"]["bound"] == 22
    code, out = run_inproc(["bounds", "--d", "3", "--dim-h1", "4", "--json"],
                           capsys)
    doc = json.loads(out)
    assert doc["sections"]["torus"]["h1_divisible"] is True
    assert doc["sections"]["torus"]["complex_dim_divisible"] is False


def test_check_path(capsys):
    code, out = run_inproc(["perdom", "check-path",
                            str(CORPUS / "circle_path.json"), "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["sections"]["path"]["derivative_identity"] is True


BAD_CASES = [
    ("unknown_version.json", "classify", "FileFormatError"),
    ("unknown_kind.json", "classify", "FileFormatError"),
    ("float_number.json", "perdom", "FileFormatError"),
    ("nonsymmetric_gram.json", "classify", "NotSymmetric"),
    ("reducible_field.json", "classify", "Reducible"),
    ("nonmonic_field.json", "classify", "NotMonic"),
    ("degree_too_large.json", "classify", "DegreeTooLarge"),
    ("isotropy_fails.json", "classify", "IsotropyFails"),
    ("positivity_fails.json", "classify", "PositivityFails"),
    ("wrong_signature.json", "classify", "WrongSignature"),
    ("oversized_ksympl.json", "ksympl", "TooLarge"),
    ("dependent_psis.json", "ksympl", "ValidationError"),
    ("nonantisymmetric_psi.json", "ksympl", "ValidationError"),
    ("nonisotropic_path.json", "perdom", "NotIsotropicPath"),
]


@pytest.mark.parametrize("name,command,error_class", BAD_CASES)
def test_malformed_corpus(name, command, error_class, capsys):
    path = str(CORPUS / "bad" / name)
    args = [command, path, "--json"] if command != "perdom" else \
        ["perdom", "check-path", path, "--json"]
    code, out = run_inproc(args, capsys)
    assert code == 2
    doc = json.loads(out)
    assert doc["status"] == "error"
    assert doc["sections"]["error"]["class"] == error_class


def test_k1_rejected_at_runtime(capsys):
    code, out = run_inproc(["ksympl", str(CORPUS / "bad" / "k1_symplectic.json"),
                            "--json"], capsys)
    assert code == 2
    doc = json.loads(out)
    assert doc["sections"]["verification"]["failure_reason"] == "NotQuadricPower"


def test_machine_output_round_trips(capsys):
    code, out = run_inproc(["classify", str(CORPUS / "qi_period.json"),
                            "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    again = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    assert again == out


@pytest.mark.parametrize("args", [
    ["classify", str(CORPUS / "qi_period.json"), "--json"],
    ["classify", str(CORPUS / "sqrt2i_period.json"), "--json"],
    ["tha", str(CORPUS / "qi_period.json"), "--n", "3", "--json"],
    ["ksympl", str(CORPUS / "quaternion3.json"), "--json"],
    ["ksympl", str(CORPUS / "quaternion3_doubled.json"), "--json"],
    ["bounds", "--d", "20", "--e", "1", "--dim-h1", "2048", "--json"],
    ["perdom", "check-path", str(CORPUS / "circle_path.json"), "--json"],
])
def test_byte_determinism_across_processes(args):
    code1, out1 = run_cli(args, hashseed="1")
    code2, out2 = run_cli(args, hashseed="424242")
    assert code1 == code2 == 0
    assert out1 == out2


def test_classify_check_mode(tmp_path, capsys):
    code, out = run_inproc(["classify", str(CORPUS / "qi_period.json"),
                            "--json"], capsys)
    recorded = tmp_path / "recorded.json"
    recorded.write_bytes(out.encode())
    code, out2 = run_inproc(["classify", str(CORPUS / "qi_period.json"),
                             "--json", "--check", str(recorded)], capsys)
    assert code == 0
    # a tampered recording fails the check
    recorded.write_bytes(out.replace("CM", "XX").encode())
    code, _ = run_inproc(["classify", str(CORPUS / "qi_period.json"),
                          "--json", "--check", str(recorded)], capsys)
    assert code == 2


def test_bounds_file_kind_parses():
    from hodgekit.cli import load_problem_file

    kind, doc = load_problem_file(str(CORPUS / "bounds_hk23.json"))
    assert kind == "bounds"
    assert doc["d"] == 20 and doc["e"] == 1


def test_internal_error_exit_code(capsys):
    from types import SimpleNamespace

    from hodgekit.cli import _run_command
    from hodgekit.errors import InternalError

    def worker():
        raise InternalError("synthetic")

    args = SimpleNamespace(json=True, check=None)
    code = _run_command("classify", worker, args)
    out = capsys.readouterr().out
    assert code == 3
    assert json.loads(out)["status"] == "internal-error"
