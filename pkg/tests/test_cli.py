"""Command-line interface: reports, exit codes, determinism."""

import json
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
INSTANCES = ROOT / "instances"


def run(*args, cwd=ROOT):
    return subprocess.run(
        [sys.executable, "-m", "homdual", *args],
        cwd=cwd, capture_output=True, text=True,
    )


def report(proc):
    return json.loads(proc.stdout)


# ------------------------------------------------------------------ verify


def test_verify_algebra_passes():
    proc = run("verify", "instances/dual_numbers.json")
    assert proc.returncode == 0
    doc = report(proc)
    assert doc["status"] == "pass"
    assert doc["violations"] == []
    assert doc["command"][0] == "verify"


def test_verify_detects_broken_table(tmp_path):
    bad = json.loads((INSTANCES / "dual_numbers.json").read_text())
    bad["mul"][1][2][1] = "2"  # e0*x becomes 2x, so (e0*e0)*x != e0*(e0*x)
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(bad))
    proc = run("verify", str(p))
    assert proc.returncode == 1
    doc = report(proc)
    assert doc["status"] == "fail"
    assert doc["violations"]


def test_verify_all_instances():
    proc = run("verify", "--all", "instances")
    assert proc.returncode == 0
    doc = report(proc)
    assert doc["status"] == "pass"
    names = [entry["file"] for entry in doc["results"]]
    assert names == sorted(names)
    assert len(names) == len(list(INSTANCES.glob("*.json")))
    assert all(entry["status"] == "pass" for entry in doc["results"])


def test_verify_all_worst_exit(tmp_path):
    good = (INSTANCES / "dual_numbers.json").read_text()
    (tmp_path / "a_good.json").write_text(good)
    bad = json.loads(good)
    bad["twist"][1][1] = "2"  # alpha(x)*(e0*e0) no longer matches (x*e0)*alpha(e0)
    (tmp_path / "b_bad.json").write_text(json.dumps(bad))
    proc = run("verify", "--all", str(tmp_path))
    assert proc.returncode == 1


def test_verify_missing_file():
    proc = run("verify", "instances/no_such_file.json")
    assert proc.returncode == 2
    assert "error:" in proc.stderr
    doc = report(proc)
    assert doc["status"] == "error"


def test_malformed_document_names_the_field(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"kind": "hom-algebra", "dim": 2, "twist": [["1", "0"], ["0", "1"]]}))
    proc = run("verify", str(p))
    assert proc.returncode == 2
    assert "mul" in proc.stderr


def test_verify_boundary_table_with_nulls():
    proc = run("verify", "instances/delannoy_boundary_8x8.json")
    assert proc.returncode == 0


# ----------------------------------------------------------------- dualize


def test_dualize_round_trip(tmp_path):
    proc = run("dualize", "instances/poly_quotient_N5_k2.json")
    assert proc.returncode == 0
    doc = report(proc)
    assert doc["result"]["kind"] == "hom-coalgebra"
    p = tmp_path / "dual.json"
    p.write_text(json.dumps(doc["result"]))
    check = run("verify", str(p))
    assert check.returncode == 0


def test_dualize_module_gives_comodule(tmp_path):
    proc = run("dualize", "instances/regular_module_dual_numbers.json")
    assert proc.returncode == 0
    doc = report(proc)
    assert doc["result"]["kind"] == "hom-comodule"
    p = tmp_path / "dual.json"
    p.write_text(json.dumps(doc["result"]))
    assert run("verify", str(p)).returncode == 0


# ----------------------------------------------------------- sweedler-delta


def test_sweedler_delta_twisted():
    proc = run("sweedler-delta", "--quotient", "instances/poly_quotient_N3_k2.json",
               "--functional", "0,0,1,0")
    assert proc.returncode == 0
    doc = report(proc)
    assert doc["result"]["terms"] == [[0, 2, "4"], [1, 1, "4"], [2, 0, "4"]]
    assert doc["result"]["labels"][2] == "x^2"


# ------------------------------------------------------------------ expand


def test_expand_normal_order():
    proc = run("expand", "--op", "normal-order", "--word", "yxyx", "--q", "2")
    assert report(proc)["result"]["poly"] == "8*x^2*y^2"


def test_expand_qbinom_formula():
    proc = run("expand", "--op", "qbinom-formula", "--n", "2", "--q", "2", "--k", "3")
    assert report(proc)["result"]["poly"] == "9*x^2 + 27*x*y + 9*y^2"


def test_expand_hom_power_matches_formula():
    a = run("expand", "--op", "hom-power", "--n", "3", "--q", "5/3", "--k", "2")
    b = run("expand", "--op", "qbinom-formula", "--n", "3", "--q", "5/3", "--k", "2")
    assert report(a)["result"]["poly"] == report(b)["result"]["poly"]


def test_expand_rejects_bad_word():
    proc = run("expand", "--op", "normal-order", "--word", "xzy", "--q", "2")
    assert proc.returncode == 2


# ----------------------------------------------------------------- seq-gen


def test_seq_gen_ones_boundary():
    proc = run("seq-gen", "--h", "instances/delannoy.json", "--case", "1",
               "--q", "1", "--boundary", "ones", "--M", "3", "--N", "3")
    assert proc.returncode == 0
    doc = report(proc)
    assert doc["result"]["entries"][3][3] == "63"


def test_seq_gen_boundary_file_reproduces_table():
    proc = run("seq-gen", "--h", "instances/delannoy.json", "--case", "1",
               "--q", "1", "--boundary", "instances/delannoy_boundary_8x8.json",
               "--M", "7", "--N", "7")
    assert proc.returncode == 0
    got = report(proc)["result"]
    want = json.loads((INSTANCES / "delannoy_table_8x8.json").read_text())
    assert got["entries"] == want["entries"]


# -------------------------------------------------------------- seq-oracle


def test_seq_oracle_all_passes():
    proc = run("seq-oracle", "--table", "instances/delannoy_table_8x8.json",
               "--h", "instances/delannoy.json", "--case", "1", "--q", "1",
               "--k", "1", "--all")
    assert proc.returncode == 0
    doc = report(proc)
    assert doc["status"] == "pass"
    assert len(doc["result"]["residuals"]) == 49
    assert all(r == "0" for _, _, r in doc["result"]["residuals"])


def test_seq_oracle_flags_twisted_mismatch():
    proc = run("seq-oracle", "--table", "instances/delannoy_table_8x8.json",
               "--h", "instances/delannoy.json", "--case", "1", "--q", "1",
               "--k", "2", "--at", "1,1")
    assert proc.returncode == 1
    doc = report(proc)
    assert doc["status"] == "fail"
    assert doc["violations"] == [{"at": [1, 1], "residual": "39"}]


def test_seq_oracle_needs_exactly_one_site():
    proc = run("seq-oracle", "--table", "instances/delannoy_table_8x8.json",
               "--h", "instances/delannoy.json", "--case", "1", "--q", "1", "--k", "1")
    assert proc.returncode == 2


# ------------------------------------------------------------- seq-minpoly


def test_seq_minpoly_recovers_delannoy():
    proc = run("seq-minpoly", "--table", "instances/delannoy_table_8x8.json",
               "--rmax", "3", "--smax", "3")
    assert proc.returncode == 0
    doc = report(proc)
    assert doc["result"]["found"] is True
    assert [doc["result"]["r"], doc["result"]["s"]] == [1, 1]
    assert doc["result"]["bipoly"]["coeffs"] == [[0, 1, "1"], [1, 0, "1"], [1, 1, "1"]]


# ---------------------------------------------------------------- convolve


def test_convolve_doubles_columns():
    proc = run("convolve", "--f", "instances/ones_12x6.json",
               "--g", "instances/ones_6x6.json", "--q", "1", "--M", "5", "--N", "5")
    assert proc.returncode == 0
    entries = report(proc)["result"]["entries"]
    for row in entries:
        assert row == ["1", "2", "4", "8", "16", "32"]


# ------------------------------------------------------------- determinism


def test_reports_are_byte_identical_across_runs():
    calls = [
        ("verify", "instances/poly_quotient_N5_k2.json"),
        ("seq-gen", "--h", "instances/delannoy.json", "--case", "1", "--q", "1",
         "--boundary", "ones", "--M", "3", "--N", "3"),
        ("seq-oracle", "--table", "instances/delannoy_table_8x8.json",
         "--h", "instances/delannoy.json", "--case", "1", "--q", "1",
         "--k", "1", "--all"),
        ("expand", "--op", "qbinom-formula", "--n", "2", "--q", "2", "--k", "3"),
    ]
    for call in calls:
        first = run(*call)
        second = run(*call)
        assert first.returncode == 0
        assert first.stdout == second.stdout
        assert first.stdout.endswith("\n")
