import json
import subprocess
import sys

import pytest

from coxgrowth.cli import run

M237_JSON = "[[1,3,2],[3,1,7],[2,7,1]]"
M237_TEXT = "1 3 2; 3 1 7; 2 7 1"
LEHMER = "1.17628081825991750654407033847"


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def matrix_file(tmp_path):
    p = tmp_path / "m237.json"
    p.write_text(json.dumps({"rank": 3, "matrix": json.loads(M237_JSON)}))
    return str(p)


@pytest.fixture
def compact_file(tmp_path):
    p = tmp_path / "m237.txt"
    p.write_text("1 3 2\n3 1 7\n2 7 1\n")
    return str(p)


def test_growth_lehmer(capsys):
    code, out, _ = call(capsys, "growth", "T(2,3,7)", "--digits", "30")
    assert code == 0 and out.strip() == LEHMER


def test_classify_a2(capsys):
    code, out, _ = call(capsys, "classify", "[[1,3],[3,1]]")
    assert code == 0 and out.strip() == "spherical A_2"


def test_classify_json(capsys):
    _, out, _ = call(capsys, "classify", "[[1,3],[3,1]]", "--format", "json")
    assert json.loads(out) == {"verdict": "spherical", "components": [
        {"vertices": [0, 1], "verdict": "spherical", "type": "A_2"}]}


def test_poincare_human(capsys):
    _, out, _ = call(capsys, "poincare", "EHNC23")
    assert "1+2t+2t^2+t^3" in out and "1-2t-2t^2+3t^3" in out


def test_poincare_json(capsys):
    _, out, _ = call(capsys, "poincare", "EHNC23", "--format", "json")
    assert json.loads(out) == {"numerator": ["1", "2", "2", "1"],
                                "denominator": ["1", "-2", "-2", "3"]}


def test_coeffs(capsys):
    _, out, _ = call(capsys, "coeffs", "T(2,4,5)", "--count", "9")
    assert out.strip() == "1, 3, 5, 8, 12, 16, 21, 28, 36"


def test_residues(capsys):
    _, out, _ = call(capsys, "residues", M237_TEXT)
    assert out.split() == ["{}", "{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}"]


def test_minimal(capsys):
    assert call(capsys, "minimal", "T(2,3,7)")[1].strip() == "minimal"
    assert call(capsys, "minimal", "EHC3")[1].strip() == "not minimal"
    assert call(capsys, "minimal", "[[1,3],[3,1]]")[1].strip() == "not in X"


def test_compare(capsys):
    code, out, _ = call(capsys, "compare", M237_JSON, "[[1,3,2],[3,1,8],[2,8,1]]", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["a_leq_b"]["injection"] == [0, 1, 2] and data["b_leq_a"] is None
    assert data["isomorphic"] is False


def test_oracle(capsys):
    _, out, _ = call(capsys, "oracle", "T(2,3,7)", "--max-len", "5", "--format", "json")
    assert json.loads(out) == {"counts": [1, 3, 5, 7, 9, 12], "complete": False}


def test_oracle_budget_is_usage_error(capsys):
    code, _, err = call(capsys, "oracle", "T(2,3,7)", "--max-len", "9", "--budget", "10")
    assert code == 2 and "budget" in err


def test_catalog_list_and_show(capsys):
    _, out, _ = call(capsys, "catalog", "list", "--format", "json")
    rows = json.loads(out)
    assert len(rows) == 75 and rows[3]["id"] == "EHC1"
    code, out, _ = call(capsys, "catalog", "show", "EHC2")
    assert code == 0 and "254, 352" in out


def test_catalog_verify_single(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = call(capsys, "catalog", "verify", "--id", "EHC2", "--output", str(report))
    assert code == 0 and out.strip() == "1/1 entries verified"
    assert json.loads(report.read_text())["passed"] == 1


@pytest.mark.slow
def test_catalog_verify_all(capsys):
    code, out, _ = call(capsys, "catalog", "verify", "--workers", "4")
    assert code == 0 and "75/75" in out


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    [],
    ["classify", "[[1,3],[2,1]]"],
    ["classify", "nonsense"],
    ["growth", "T(2,3,7)", "--digits", "5"],
    ["coeffs", "T(2,3,7)", "--count", "-1"],
    ["catalog", "show", "EHC99"],
    ["catalog", "show"],
    ["minimal", "[[1,0,0,0],[0,1,3,2],[0,3,1,3],[0,2,3,1]]"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and err


def test_json_is_stable(capsys):
    outs = {call(capsys, cmd, "EHNC13", "--format", "json")[1]
            for cmd in ("classify", "poincare", "growth", "residues", "minimal") for _ in range(2)}
    assert len(outs) == 5


@pytest.mark.parametrize("cmd", ["classify", "poincare", "coeffs", "growth", "residues",
                                 "minimal", "oracle"])
def test_input_forms_are_interchangeable(capsys, cmd, matrix_file, compact_file):
    outs = {call(capsys, cmd, src, "--format", "json")[1]
            for src in (M237_JSON, M237_TEXT, "T(2,3,7)", "<2,3,7>", matrix_file, compact_file)}
    assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coxgrowth", "growth", "T(2,3,7)", "--digits", "12"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1.17628081826"


def test_verification_failure_exits_1(capsys, monkeypatch):
    import dataclasses
    from coxgrowth import catalog
    e = catalog.get_entry("EHC2")
    bad = dataclasses.replace(e, in_M=not e.in_M)
    monkeypatch.setattr(catalog, "catalog_entries", lambda: (bad,))
    code, out, _ = call(capsys, "catalog", "verify")
    assert code == 1
    assert "FAIL EHC2: in_M" in out and "0/1 entries verified" in out
