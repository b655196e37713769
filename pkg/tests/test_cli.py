import json
import subprocess
import sys

import pytest

from dforms.cli import main, parse_k_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dims_rank_two(capsys):
    code, out, _ = run(capsys, "dims", "--q", "2", "--r", "2", "--k", "0..4")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == "drinfeld-forms/1"
    assert [row["oracle"] for row in doc["rows"]] == [1, 3, 5, 7, 9]
    assert all(row["match"] for row in doc["rows"])
    assert set(doc["rows"][0]) == {"k", "oracle", "formula", "match"}


def test_dims_rank_one(capsys):
    code, out, _ = run(capsys, "dims", "--q", "2", "--r", "1", "--k", "0..9")
    assert code == 0
    assert [row["oracle"] for row in json.loads(out)["rows"]] == [1] * 10


@pytest.mark.parametrize("argv", [
    ["dims", "--q", "0", "--r", "2"],
    ["dims", "--q", "6", "--r", "2"],
    ["dims", "--q", "32", "--r", "2"],
    ["dims", "--q", "2", "--r", "0"],
    ["dims", "--q", "2", "--r", "2", "--k", "x"],
    ["dims", "--q", "2"],
    ["hecke", "--q", "2", "--r", "2", "--a", "0,1,2", "--b", "0,1"],
    ["strata", "--q", "2", "--r", "2", "--subspace", "1 0 1"],
    ["bogus"],
])
def test_invalid_input_exits_two(capsys, argv):
    assert main(argv) == 2


def test_invariants_unipotent(capsys):
    code, out, _ = run(capsys, "invariants", "--q", "2", "--r", "2", "--group", "unipotent",
                       "--k", "0..5")
    assert code == 0
    assert [row["invariant_dim"] for row in json.loads(out)["rows"]] == [1, 2, 3, 4, 5, 6]


def test_invariants_sl(capsys):
    code, out, _ = run(capsys, "invariants", "--q", "3", "--r", "2", "--group", "sl", "--k", "0..6")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [row["formula"] for row in rows] == [1, 0, 1, 0, 2, 0, 2]


def test_invariants_missing_file(capsys):
    assert main(["invariants", "--group", "file:missing.txt"]) == 2


def test_invariants_from_file(capsys, tmp_path):
    path = tmp_path / "half.txt"
    path.write_text("4 2\n1 1 0 1\n")
    code, out, _ = run(capsys, "invariants", "--group", f"file:{path}", "--k", "0..4")
    doc = json.loads(out)
    assert code == 0 and doc["q"] == 4
    assert [row["invariant_dim"] for row in doc["rows"]] == [1, 3, 5, 7, 9]
    assert all(row["source"] == "level_dim_formula" for row in doc["rows"])


def test_invariants_file_without_formula(capsys, tmp_path):
    path = tmp_path / "gl.txt"
    path.write_text("2 2\n0 1 1 0\n1 1 0 1\n")
    code, out, _ = run(capsys, "invariants", "--group", f"file:{path}", "--k", "0..3")
    doc = json.loads(out)
    assert code == 0
    assert all(row["formula"] is None and row["match"] is None for row in doc["rows"])


def test_invariants_malformed_file(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 2\n1 0 1\n")
    assert main(["invariants", "--group", f"file:{path}"]) == 2


def test_universal(capsys):
    code, out, _ = run(capsys, "universal", "--q", "2", "--r", "2")
    doc = json.loads(out)
    assert code == 0
    values = {row["check"]: row["value"] for row in doc["rows"]}
    assert values["c_1"] == "u_x + u_y + u_{x+y}"
    assert values["c_2"] == "u_x*u_y*u_{x+y}"
    assert all(row["match"] for row in doc["rows"])


def test_strata(capsys):
    code, out, _ = run(capsys, "strata", "--q", "2", "--r", "2", "--subspace", "1 0")
    row = json.loads(out)["rows"][0]
    assert code == 0 and row["rank"] == 1 and row["coefficients"] == ["u_x", "0"]


def test_strata_all_subspaces(capsys):
    code, out, _ = run(capsys, "strata", "--q", "2", "--r", "3")
    assert code == 0 and len(json.loads(out)["rows"]) == 15


def test_hecke(capsys):
    code, out, _ = run(capsys, "hecke", "--q", "2", "--r", "2", "--a", "0,1", "--b", "0,1")
    doc = json.loads(out)
    assert code == 0 and doc["oracle_match"] is True
    assert doc["product"] == [{"type": [0, 2], "mult": 1}, {"type": [1, 1], "mult": 3}]


def test_csv_output(capsys):
    code, out, _ = run(capsys, "dims", "--q", "3", "--r", "2", "--k", "0..2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["k,oracle,formula,match", "0,1,1,True", "1,4,4,True", "2,7,7,True"]


def test_deterministic_output(capsys):
    argv = ["verify", "--criteria", "7", "--seed", "3"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0


def test_cap_flag_exit_two(capsys):
    assert main(["dims", "--q", "2", "--r", "3", "--k", "6", "--cap-monomials", "10"]) == 2


def test_env_caps(monkeypatch):
    monkeypatch.setenv("DFORMS_CAPS", "group=10")
    assert main(["invariants", "--q", "3", "--r", "2", "--group", "gl", "--k", "1"]) == 2


def test_mismatch_exits_one(capsys, monkeypatch):
    import dforms.cli as cli
    monkeypatch.setattr(cli, "dim_formula", lambda r, q, k: -1)
    assert main(["dims", "--q", "2", "--r", "2", "--k", "0..1"]) == 1


def test_k_range():
    assert parse_k_range("0..3") == [0, 1, 2, 3]
    assert parse_k_range("1,4") == [1, 4]
    assert parse_k_range("5") == [5]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dforms", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    for name in ("dims", "invariants", "universal", "strata", "hecke", "verify"):
        assert name in proc.stdout


def test_verify_full_grid_exits_zero(capsys):
    assert main(["verify"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "pass"
    assert [s["criterion"] for s in doc["summary"]] == list(range(1, 10))
    assert all(s["passed"] == s["checks"] for s in doc["summary"])
