"""Acceptance battery: one test and one printed PASS/FAIL line per criterion.

Run with ``pytest -s tests/test_acceptance.py`` to see the summary lines.
"""

import math
import subprocess
import sys
import time

import numpy as np
import pytest

from quatcycles import (
    ComplexScalar,
    Quaternion,
    TimeQuaternion,
    cycle_equivalent,
    exp_q,
    exp_series_oracle,
    matrix_exp,
    shift_cycle,
    to_matrix4,
)
from quatcycles import selfcheck

SEED = 20260816

SWEEP_HEADER = "k,tau_input,t_canonical,tau_phase,theta1,theta2,theta3,max_abs_diff_vs_k0"


def _report(num, name, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"[criterion {num}] {name}: {status} ({detail})")


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "quatcycles", *args],
        capture_output=True,
        text=True,
    )


@pytest.fixture(scope="module")
def sample_quaternions():
    rng = np.random.default_rng(SEED)
    return [Quaternion(*rng.uniform(-3.0, 3.0, 4)) for _ in range(10_000)]


def test_criterion_1_exp_matches_series_and_matrix_oracles(sample_quaternions):
    start = time.perf_counter()
    worst_series = 0.0
    worst_matrix = 0.0
    for q in sample_quaternions:
        fast = exp_q(q)
        series = exp_series_oracle(q, 60)
        diff = math.hypot(
            fast.q1 - series.q1,
            fast.q2 - series.q2,
            fast.q3 - series.q3,
            fast.q4 - series.q4,
        )
        worst_series = max(worst_series, diff / series.norm())
        via_matrix = matrix_exp(to_matrix4(q))
        worst_matrix = max(
            worst_matrix, float(np.max(np.abs(via_matrix - to_matrix4(fast))))
        )
    elapsed = time.perf_counter() - start
    ok = worst_series <= 1e-11 and worst_matrix <= 1e-10 and elapsed < 5.0
    _report(
        1,
        "exp vs series and matrix oracles (10000 samples)",
        ok,
        f"series rel {worst_series:.3e} <= 1e-11,"
        f" matrix abs {worst_matrix:.3e} <= 1e-10, {elapsed:.2f}s < 5s",
    )
    assert ok


def test_criterion_2_norm_law_on_same_sample(sample_quaternions):
    worst = 0.0
    for q in sample_quaternions:
        expected = math.exp(q.q1)
        worst = max(worst, abs(exp_q(q).norm() - expected) / expected)
    ok = worst <= 1e-12
    _report(
        2,
        "norm of exp equals exp of scalar part",
        ok,
        f"max rel dev {worst:.3e} <= 1e-12",
    )
    assert ok


def test_criterion_3_hyper_periodicity():
    res = selfcheck.check_periodicity(np.random.default_rng(SEED + 3), 1000)
    ok = res.max_deviation <= 1e-10
    _report(
        3,
        "whole turns along the axis leave exp unchanged (k in -3..3)",
        ok,
        f"max abs dev {res.max_deviation:.3e} <= 1e-10",
    )
    assert ok


def test_criterion_4_log_inversion_both_directions():
    branches = selfcheck.check_log_branches(np.random.default_rng(SEED + 4), 1000)
    principal = selfcheck.check_log_roundtrip(np.random.default_rng(SEED + 40), 1000)
    ok = branches.max_deviation <= 1e-10 and principal.max_deviation <= 1e-10
    _report(
        4,
        "exp inverts every log branch; principal log inverts exp",
        ok,
        f"branch rel {branches.max_deviation:.3e} <= 1e-10,"
        f" principal abs {principal.max_deviation:.3e} <= 1e-10",
    )
    assert ok


def test_criterion_5_coordinate_round_trip_with_poles():
    res = selfcheck.check_coords_roundtrip(
        np.random.default_rng(SEED + 5), 10_000, pole_fraction=0.2
    )
    ok = res.max_deviation <= 1e-10
    _report(
        5,
        "spherical round trip incl. pole-adjacent samples (10000)",
        ok,
        f"max abs dev {res.max_deviation:.3e} <= 1e-10",
    )
    assert ok


def test_criterion_6_cycle_shift_equivalence(tmp_path):
    rng = np.random.default_rng(SEED + 6)
    shift_failures = 0
    for _ in range(1000):
        q = selfcheck.random_time_quaternion(rng)
        for k in range(-5, 6):
            if not cycle_equivalent(q, shift_cycle(q, k), 1e-10):
                shift_failures += 1
    rng2 = np.random.default_rng(SEED + 60)
    false_positives = 0
    for _ in range(1000):
        q = selfcheck.random_time_quaternion(rng2)
        nudged = TimeQuaternion(
            ComplexScalar(q.time.t, q.time.tau + 0.1), q.x, q.y, q.z
        )
        if cycle_equivalent(q, nudged, 1e-6):
            false_positives += 1
    out = tmp_path / "sweep.csv"
    proc = run_cli(
        "sweep", "0.5", "0.3", "1", "0.5", "-0.2",
        "--k-min", "-5", "--k-max", "5", "--out", str(out),
    )
    rows = out.read_text(encoding="utf-8").splitlines()[1:]
    worst_row = max(float(line.split(",")[-1]) for line in rows)
    ok = (
        shift_failures == 0
        and false_positives == 0
        and proc.returncode == 0
        and worst_row <= 1e-10
    )
    _report(
        6,
        "shifted points equivalent at 1e-10; 0.1 nudge never is; sweep rows <= 1e-10",
        ok,
        f"shift failures {shift_failures}, false positives {false_positives},"
        f" sweep max {worst_row:.3e}",
    )
    assert ok


def test_criterion_7_fundamental_range():
    res = selfcheck.check_fundamental_domain(np.random.default_rng(SEED + 7), 10_000)
    ok = res.max_deviation <= 0.0
    _report(
        7,
        "fundamental_domain idempotent with tau in (-pi, pi] (10000, |tau| <= 100pi)",
        ok,
        f"violations metric {res.max_deviation:.3e}",
    )
    assert ok


def test_criterion_8_cli_contract(tmp_path):
    out = tmp_path / "contract.csv"
    p0 = run_cli("sweep", "0.4", "0.2", "0.7", "-0.3", "0.5", "--out", str(out))
    header = out.read_text(encoding="utf-8").splitlines()[0] if out.exists() else ""
    p1 = run_cli(
        "cycle-check", "0", "0.3", "1", "0", "0",
        "--against", "0", "0.4", "1", "0", "0",
    )
    p2 = run_cli("exp", "1", "2", "3", "nope")
    p3 = run_cli("log", "0", "0", "0", "0")
    ok = (
        p0.returncode == 0
        and header == SWEEP_HEADER
        and p1.returncode == 1
        and p2.returncode == 2
        and p3.returncode == 3
    )
    _report(
        8,
        "sweep header golden; exit codes 0/1/2/3 on scripted invocations",
        ok,
        f"codes {p0.returncode}/{p1.returncode}/{p2.returncode}/{p3.returncode},"
        f" header {'ok' if header == SWEEP_HEADER else 'MISMATCH'}",
    )
    assert ok
