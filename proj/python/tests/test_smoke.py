"""Smoke tests for the python module and the CLI."""

import json
import math
import os
import subprocess

import pytest

import xyn


def test_enumerate_n5():
    sols = xyn.enumerate_solutions(5, 100)
    assert [(s["x"], s["y"], s["a"], s["b"], s["c"]) for s in sols] == [
        (1, 3, 1, 0, 2),
        (241, 9, 3, 0, 2),
    ]


def test_check_solution():
    assert xyn.check_solution(2, 5, 0, 0, 2, 3)["status"] == "valid"
    res = xyn.check_solution(837, 15, 1, 5, 2, 5)
    assert res["status"] == "not-coprime"
    assert res["witness"] == 3
    res = xyn.check_solution(5, 3, 1, 0, 0, 4)
    assert res["status"] == "equation-fails"
    assert res["witness"] == 54


def test_bigint_round_trip():
    value = xyn.s_unit_value(50, 30, 20)
    assert value == 2**50 * 3**30 * 11**20  # far beyond 64 bits
    assert xyn.factor_as_s_unit(value) == [50, 30, 20]
    assert xyn.factor_as_s_unit(value * 7) is None
    # the largest table row holds exactly
    assert xyn.check_solution(912668635, 940897, 3, 8, 2, 3)["status"] == "valid"


def test_arith_ops():
    assert xyn.integer_sqrt_exact(289) == 17
    assert xyn.integer_sqrt_exact(2) is None
    assert xyn.nth_root_exact(759375, 5) == 15
    assert xyn.legendre_symbol(-2, 11) == 1
    assert xyn.legendre_symbol(-6, 11) == 1
    assert xyn.legendre_symbol(-1, 11) == -1
    assert xyn.largest_prime_factor(242) == 11
    assert xyn.canonical_exponents(12) == [3, 4]
    assert not xyn.mod8_admissible(0, 6, 1, True)


def test_reduction():
    d = xyn.decompose(18, 0, 1, "cubic")
    assert (d["alpha"], d["beta"], d["gamma"], d["z"]) == (0, 0, 1, 8)
    assert xyn.curve_family_size("cubic") == 216
    assert xyn.curve_family_size("quartic") == 64
    p = xyn.solution_to_point(5, 9, 6, 0, 1, 3)
    assert p["U"] == (9, 4)
    assert p["V"] == (5, 8)
    assert p["z"] == 2


def test_lucas_engine():
    eta = xyn.QuadraticInteger.from_doubled(11, 1, 1)  # (1 + i sqrt 11)/2
    assert xyn.lucas_term(eta, 5) == 1
    assert eta.norm() == 3

    eta2 = xyn.QuadraticInteger.from_integers(2, 1, 2)
    assert (eta2**5).twice_u == 2 * 241
    assert xyn.lucas_l5_quartic(2, 1, 2) == -11
    lift = xyn.lift_eta_power(eta2, 5)
    assert lift["candidate"]["x"] == 241 and lift["candidate"]["y"] == 9

    assert [xyn.class_number_by_forms(d) for d in (-4, -8, -3, -24, -11, -88, -132, -264)] == [
        1, 1, 1, 2, 1, 2, 4, 8,
    ]
    assert xyn.quad_field(6)["class_number"] == 2
    assert xyn.primitive_prime_test(11, xyn.QuadraticInteger.from_integers(2, 1, 1), 5) == "primitive"
    assert [p for p in range(5, 100) if xyn.eleven_congruence_admits(p)
            and all(p % q for q in range(2, p))] == [5]


def test_case_analysis():
    rep = xyn.case_analysis_p5(2, box=50)
    assert [c["verdict"] for c in rep["candidates"]] == ["rejected-b-zero", "rejected-b-zero"]
    assert rep["positive_sign_lifts"] == 0 and rep["case2_alpha1_positive"] == 0
    rep6 = xyn.case_analysis_p5(6, box=50)
    assert [c["verdict"] for c in rep6["candidates"]] == ["rejected-coprimality"]
    assert rep6["candidates"][0]["solution"]["x"] == 837


def test_tables():
    rows = xyn.ingest_tables(os.environ["XYN_TABLES"])
    assert len(rows) == 116
    assert sum(1 for r in rows if r["table"] in (1, 2)) == 54
    for r in rows:
        assert r["x"] ** 2 + 2 ** r["a"] * 3 ** r["b"] * 11 ** r["c"] == r["y"] ** r["n"]
        assert math.gcd(r["x"], r["y"]) == 1


# --- CLI ---------------------------------------------------------------

def run_cli(*args):
    return subprocess.run([os.environ["XYN_CLI"], *args], capture_output=True, text=True)


def test_cli_enumerate():
    res = run_cli("enumerate", "--n", "5", "--y-max", "100")
    assert res.returncode == 0
    report = json.loads(res.stdout)
    assert report["command"] == "enumerate"
    assert [s["x"] for s in report["solutions"]] == ["1", "241"]

    again = run_cli("enumerate", "--n", "5", "--y-max", "100")
    assert again.stdout == res.stdout  # byte-identical reruns


def test_cli_reduce():
    res = run_cli("reduce", "--n", "3", "--a", "6", "--b", "0", "--c", "1")
    assert res.returncode == 0
    report = json.loads(res.stdout)
    assert report["config"]["model"]["equation"] == "V^2 = U^3 - 11"
    assert report["config"]["model"]["z"] == "2"


def test_cli_lucas():
    res = run_cli("lucas", "--d", "2", "--box", "50")
    assert res.returncode == 0
    report = json.loads(res.stdout)
    cands = report["config"]["candidates"]
    assert [c["solution"]["x"] for c in cands] == ["1", "241"]
    # the reference point list misses (15/8, 41/64); surfaced as a typo finding
    assert any(f["severity"] == "paper-typo" for f in report["findings"])


def test_cli_usage_errors():
    assert run_cli("enumerate", "--n", "2", "--y-max", "10").returncode == 2
    assert run_cli("reduce", "--n", "5", "--a", "0", "--b", "0", "--c", "0").returncode == 2
    assert run_cli("nonsense").returncode == 2
    assert run_cli("lucas", "--d", "3").returncode == 2


def test_cli_smooth_scan():
    res = run_cli("smooth-scan", "--n-max", "9", "--y-max", "50")
    assert res.returncode == 0
    counts = json.loads(res.stdout)["config"]["counts"]
    assert counts["8"] == "0" and counts["9"] == "0"
    assert int(counts["3"]) > 0


def test_cli_out_file(tmp_path):
    out = tmp_path / "report.json"
    res = run_cli("enumerate", "--n", "6", "--y-max", "100", "--out", str(out))
    assert res.returncode == 0
    report = json.loads(out.read_text())
    assert len(report["solutions"]) == 3
