import csv
import io
import json
import math
import subprocess
import sys

import pytest

from hermite_bounds import cli


def run(argv):
    buf = io.StringIO()
    code = cli.main(argv, buf)
    return code, buf.getvalue()


def test_report_k1():
    code, out = run(["report", "--k", "1"])
    assert code == 0
    rep = json.loads(out)
    assert rep["Mk"] == pytest.approx(2 ** (1 / 6) * 4 / math.e, rel=1e-13)
    assert rep["ratio"] == pytest.approx(0.67431, abs=1e-5)
    assert rep["sandwich_ok"] is None
    assert rep["omega"] == 1.0


def test_report_k6_and_large_k():
    assert json.loads(run(["report", "--k", "6"])[1])["sandwich_ok"] is True
    rep = json.loads(run(["report", "--k", "300"])[1])
    # C_300 is far beyond double range: only the log fields carry values
    assert rep["Mk"] is None and rep["log:Mk"] > 700
    assert rep["log:lower"] < rep["log:Mk"] < rep["log:upper"]
    assert set(rep) == {"k", "log:Ck", "omega", "omega_upper", "Mk", "log:Mk", "lower",
                        "log:lower", "upper", "log:upper", "ratio", "sandwich_ok"}


@pytest.mark.parametrize("argv", [
    ["report", "--k", "0"],
    ["report", "--k", "5", "--tol", "0.1"],
    ["report"],
    ["sweep", "--k-min", "5", "--k-max", "1"],
    ["sweep", "--k-min", "1", "--k-max", "3", "--stride", "0"],
    ["sweep", "--k-min", "0", "--k-max", "3"],
    ["sweep", "--k-min", "1", "--k-max", "3", "--format", "xml"],
    ["verify", "--suite", "nope"],
    ["plotdata", "envelope"],
    ["plotdata", "ratio", "--k-min", "3"],
    ["plotdata", "zero-bounds", "--k-min", "1", "--k-max", "4"],
    ["plotdata", "volume"],
    ["certify", "--target", "nope"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv)[0] == 2


def test_verify_failure_exit_1(monkeypatch):
    bad = [cli.verify.CheckResult("demo check", True), cli.verify.CheckResult("broken", False, "k=7")]
    monkeypatch.setattr(cli.verify, "run_suite", lambda name: bad)
    code, out = run(["verify", "--suite", "airy"])
    assert code == 1
    assert "broken FAIL (k=7)" in out
    assert out.rstrip().endswith("first failure: broken k=7")


def test_certify_failure_exit_1(monkeypatch):
    failing = cli.certify.Certificate("incr:A", [], False, note="min coefficient -1")
    monkeypatch.setattr(cli.certify, "all_certificates", lambda: [failing])
    assert run(["certify", "--target", "incr:A"])[0] == 1


def test_verify_airy_lines():
    code, out = run(["verify", "--suite", "airy"])
    assert code == 0
    assert "A(1.46935)=1.1668 OK" in out


def test_verify_certificates_lines():
    code, out = run(["verify", "--suite", "certificates"])
    assert code == 0
    assert "incr:A shift-positivity PASS" in out


def test_certify_output():
    code, out = run(["certify", "--target", "incr:B"])
    assert code == 0
    assert out.startswith("target: incr:B\n")
    assert "verdict: PASS" in out and "sturm: k=2 r=197/50" in out
    code, out = run(["certify"])
    assert code == 0 and out.count("target:") == 5


def test_sweep_csv_rows():
    code, out = run(["sweep", "--k-min", "6", "--k-max", "100"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 95 and rows[0]["k"] == "6"
    for r in rows:
        assert 27 / 61 < float(r["ratio"]) < float(r["upper_over_Ck"])
    assert "\r" not in out


def test_sweep_small_k_leaves_bounds_empty():
    rows = list(csv.DictReader(io.StringIO(run(["sweep", "--k-min", "1", "--k-max", "6"])[1])))
    assert rows[0]["lower_over_Ck"] == "" and rows[5]["lower_over_Ck"] != ""


def test_sweep_deterministic_and_parallel_identical():
    args = ["sweep", "--k-min", "3", "--k-max", "400", "--stride", "7", "--format", "json"]
    serial = run(args)[1]
    assert run(args)[1] == serial
    assert run(args + ["--parallel"])[1] == serial
    data = json.loads(serial)
    assert [d["k"] for d in data] == list(range(3, 401, 7))


def test_fifteen_significant_digits():
    assert cli.fmt(math.pi) == "3.14159265358979"
    assert cli.fmt(True) == "true" and cli.fmt(None) == "" and cli.fmt(7) == "7"


def test_plotdata_envelope():
    code, out = run(["plotdata", "envelope", "--k", "20"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0].keys() == {"x", "log:weighted_square", "log:upper_envelope",
                              "log:lower_envelope"}
    checked = 0
    for r in rows:
        if r["log:upper_envelope"] and float(r["x"]) ** 2 < 40 - 1.5:
            assert float(r["log:weighted_square"]) <= float(r["log:upper_envelope"])
            checked += 1
    assert checked > 300


def test_plotdata_ratio_and_zero_bounds():
    rows = list(csv.DictReader(io.StringIO(
        run(["plotdata", "ratio", "--k-min", "6", "--k-max", "1000", "--stride", "50"])[1])))
    tail = [abs(float(r["ratio"]) - 0.715452) for r in rows[-5:]]
    assert max(tail) < 0.005
    rows = list(csv.DictReader(io.StringIO(
        run(["plotdata", "zero-bounds", "--k-min", "3", "--k-max", "500"])[1])))
    assert len(rows) == 498
    assert all(float(r["lower"]) < float(r["x_kk"]) < float(r["upper"]) for r in rows)


def test_run_helper_and_module_entry():
    assert json.loads(cli.run(["report", "--k", "2"]))["k"] == 2
    proc = subprocess.run([sys.executable, "-m", "hermite_bounds", "report", "--k", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["k"] == 3
    proc = subprocess.run([sys.executable, "-m", "hermite_bounds", "report", "--k", "-4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and "error" in proc.stderr
