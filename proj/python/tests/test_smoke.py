"""Smoke tests for the Python module and the command line tool."""

import json
import os
import subprocess
from fractions import Fraction

import pytest

import orbirr

CLI = os.environ.get("ORBIRR_CLI")
needs_cli = pytest.mark.skipif(not CLI, reason="ORBIRR_CLI not set")


def run_cli(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_chi_example():
    assert orbirr.chi("5x(1,2) 4x(1,3) 1x(1,6)") == "1"
    assert orbirr.cartier_index("5x(1,2) 4x(1,3) 1x(1,6)") == 6


def test_contribution_telescopes():
    total = sum(Fraction(orbirr.contribution(2, 5, i)) for i in range(5))
    assert total == Fraction(-1)  # -(5^2 - 1)/24


def test_table_a_shape():
    rows = orbirr.table_a()
    assert len(rows) == 12
    assert sum(len(vals) for _, _, vals in rows) == 85


def test_h0_bounds():
    # Fixing the local index of L0 to 0 at the (1,6) point (last in canonical order).
    residues = ["*"] * 9 + ["0"]
    value = orbirr.h0_lower_bound("5x(1,2) 4x(1,3) 1x(1,6)", "1/6", "1/6", 7, residues)
    assert value == "719/72"
    assert orbirr.h0_exact("{}", "4", "5", 2, []) == "14"  # the X2,6 plurigenus


def test_rho0_and_bounds():
    assert orbirr.rho0(6) == 6
    assert orbirr.birational_from(1, 1, "1", 1, "1") == 5
    bound, per_case, gorenstein = orbirr.global_bound()
    assert bound == 17
    assert gorenstein == 5
    assert per_case[10] == 17 and per_case[2] == 11


def test_sharp_never_worse():
    for ix in (2, 3, 4, 5, 6, 8, 10, 12):
        assert orbirr.case_bound(ix, "sharp") <= orbirr.case_bound(ix, "paper")


def test_certificate_json_lines():
    lines = orbirr.case_certificate_json(8).strip().splitlines()
    objs = [json.loads(line) for line in lines]
    assert len(objs) == 2  # one object per scenario
    assert all(o["case_bound"] == 16 for o in objs)
    assert all(o["scenario"]["m0"] == 4 for o in objs)


def test_wps():
    assert orbirr.wps_bound("X10") == 5
    assert orbirr.wps_bound("X8 in P(1,1,1,1,4)") == 4
    assert orbirr.wps_cross_check("X2,6", 20)


@needs_cli
def test_cli_case_example():
    r = run_cli("case", "--index", "10", "--mode", "paper")
    assert r.returncode == 0
    assert "case bound: m >= 17" in r.stdout


@needs_cli
def test_cli_chi_example():
    r = run_cli("chi", "5x(1,2) 4x(1,3) 1x(1,6)")
    assert r.returncode == 0
    assert "chi:           1" in r.stdout


@needs_cli
def test_cli_bound_example():
    r = run_cli("bound", "--m0", "1", "--m1", "1", "--mu0", "1", "--rho0", "1", "--zeta", "1")
    assert r.returncode == 0
    assert "m >= 5" in r.stdout


@needs_cli
def test_cli_json_matches_text_layer():
    r = run_cli("--json", "case", "--index", "8")
    assert r.returncode == 0
    objs = [json.loads(line) for line in r.stdout.strip().splitlines()]
    assert [o["scenario"]["final_m"] for o in objs] == [16, 16]


@needs_cli
def test_cli_rejects_malformed_basket():
    r = run_cli("chi", "1x(2,4)")  # gcd(2,4) != 1
    assert r.returncode != 0
    assert "error" in r.stderr


@needs_cli
def test_cli_rejects_inadmissible_pair():
    r = run_cli("baskets", "--chi", "2", "--index", "10")
    assert r.returncode != 0


@needs_cli
def test_cli_rejects_out_of_range_residue():
    r = run_cli("h0", "--basket", "1x(1,2)", "--L3", "1/2", "--lambda", "1/2",
                "--m", "3", "--residues", "7")
    assert r.returncode != 0
    assert "out of range" in r.stderr
