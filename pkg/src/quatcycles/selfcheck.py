"""Randomized cross-checks tying the closed-form operations to their oracles.

Each check draws its own samples, measures the worst deviation against an
independent route (power series, matrix exponential, algebraic identity, or
round trip) and reports it next to the tolerance it must stay under.  The
command line ``verify`` subcommand runs the whole battery; the test suite
reuses the same functions with larger sample counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cycletime import (
    ComplexScalar,
    TimeQuaternion,
    canonical_distance,
    cycle_equivalent,
    fundamental_domain,
    log_eta,
    shift_cycle,
)
from .hyperspherical import from_cartesian, to_cartesian
from .logarithm import log_branch, log_principal
from .quaternion import (
    Quaternion,
    exp_q,
    exp_series_oracle,
    matrix_exp,
    to_matrix4,
)

__all__ = ["CheckResult", "run_all"]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CheckResult:
    name: str
    samples: int
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance


def random_quaternion(rng, low=-3.0, high=3.0) -> Quaternion:
    a = rng.uniform(low, high, 4)
    return Quaternion(a[0], a[1], a[2], a[3])


def random_nonzero_quaternion(rng, low=-3.0, high=3.0) -> Quaternion:
    while True:
        q = random_quaternion(rng, low, high)
        if q.norm() > 0.0:
            return q


def random_time_quaternion(rng) -> TimeQuaternion:
    t, tau = rng.uniform(-3.0, 3.0), rng.uniform(-10.0, 10.0)
    x, y, z = rng.uniform(-3.0, 3.0, 3)
    return TimeQuaternion(ComplexScalar(t, tau), x, y, z)


def _diff_norm(a: Quaternion, b: Quaternion) -> float:
    return math.hypot(a.q1 - b.q1, a.q2 - b.q2, a.q3 - b.q3, a.q4 - b.q4)


def _max_component_diff(a: Quaternion, b: Quaternion) -> float:
    return max(
        abs(a.q1 - b.q1), abs(a.q2 - b.q2), abs(a.q3 - b.q3), abs(a.q4 - b.q4)
    )


def check_exp_series(rng, samples: int) -> CheckResult:
    """exp_q against the 60-term power series, relative to the series norm."""
    worst = 0.0
    for _ in range(samples):
        q = random_quaternion(rng)
        fast = exp_q(q)
        slow = exp_series_oracle(q, 60)
        worst = max(worst, _diff_norm(fast, slow) / slow.norm())
    return CheckResult("exp vs series oracle", samples, worst, 1e-11)


def check_exp_matrix(rng, samples: int) -> CheckResult:
    """matrix_exp of the left-multiplication matrix against exp_q, entrywise."""
    worst = 0.0
    for _ in range(samples):
        q = random_quaternion(rng)
        via_matrix = matrix_exp(to_matrix4(q))
        direct = to_matrix4(exp_q(q))
        worst = max(worst, float(np.max(np.abs(via_matrix - direct))))
    return CheckResult("exp vs matrix oracle", samples, worst, 1e-10)


def check_norm_law(rng, samples: int) -> CheckResult:
    """|exp_q(q)| must equal e^{q1} regardless of the vector part."""
    worst = 0.0
    for _ in range(samples):
        q = random_quaternion(rng)
        expected = math.exp(q.q1)
        worst = max(worst, abs(exp_q(q).norm() - expected) / expected)
    return CheckResult("exp norm law", samples, worst, 1e-12)


def check_periodicity(rng, samples: int, k_range=range(-3, 4)) -> CheckResult:
    """Adding whole turns along the vector axis must not move the exponential."""
    worst = 0.0
    for _ in range(samples):
        q = random_nonzero_quaternion(rng)
        v = math.hypot(q.q2, q.q3, q.q4)
        if v == 0.0:
            continue
        nx, ny, nz = q.q2 / v, q.q3 / v, q.q4 / v
        base = exp_q(q)
        for k in k_range:
            length = v + TWO_PI * k
            shifted = Quaternion(q.q1, nx * length, ny * length, nz * length)
            worst = max(worst, _max_component_diff(exp_q(shifted), base))
    return CheckResult("exp hyper-periodicity", samples, worst, 1e-10)


def check_log_branches(rng, samples: int, k_range=range(-3, 4)) -> CheckResult:
    """exp_q must invert log_branch on every sheet, relative to |q|."""
    worst = 0.0
    for _ in range(samples):
        q = random_nonzero_quaternion(rng)
        n = q.norm()
        for k in k_range:
            back = exp_q(log_branch(q, k).value)
            worst = max(worst, _diff_norm(back, q) / n)
    return CheckResult("log branch inversion", samples, worst, 1e-10)


def check_log_roundtrip(rng, samples: int) -> CheckResult:
    """log_principal must invert exp_q away from the angle boundaries."""
    worst = 0.0
    for _ in range(samples):
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        length = rng.uniform(0.01, math.pi - 0.01)
        q = Quaternion(
            rng.uniform(-3.0, 3.0),
            direction[0] * length,
            direction[1] * length,
            direction[2] * length,
        )
        back = log_principal(exp_q(q)).value
        worst = max(worst, _max_component_diff(back, q))
    return CheckResult("principal log round trip", samples, worst, 1e-10)


def check_coords_roundtrip(rng, samples: int, pole_fraction=0.2) -> CheckResult:
    """to_cartesian(from_cartesian(q)) must reproduce q, poles included."""
    worst = 0.0
    n_pole = int(samples * pole_fraction)
    for i in range(samples):
        if i < n_pole:
            # Land within 1e-6 of the theta1 pole, where the first cosine
            # nearly vanishes and naive formulas lose digits.
            sign = 1.0 if rng.uniform() < 0.5 else -1.0
            t1 = sign * (math.pi / 2.0 - rng.uniform(0.0, 1e-6))
            t2 = rng.uniform(-math.pi / 2.0, math.pi / 2.0)
            t3 = rng.uniform(-math.pi, math.pi)
            r = rng.uniform(0.1, 5.0)
            c1 = math.cos(t1)
            c2 = math.cos(t2)
            q = Quaternion(
                r * c1 * c2 * math.cos(t3),
                r * c1 * c2 * math.sin(t3),
                r * c1 * math.sin(t2),
                r * math.sin(t1),
            )
        else:
            q = random_nonzero_quaternion(rng)
        back = to_cartesian(from_cartesian(q))
        worst = max(worst, _max_component_diff(back, q))
    return CheckResult("spherical round trip", samples, worst, 1e-10)


def check_shift_invariance(rng, samples: int, k_range=range(-5, 6)) -> CheckResult:
    """Canonical log fields must survive whole-cycle shifts untouched."""
    worst = 0.0
    for _ in range(samples):
        q = random_time_quaternion(rng)
        ref = log_eta(q)
        for k in k_range:
            worst = max(worst, canonical_distance(log_eta(shift_cycle(q, k)), ref))
    return CheckResult("cycle shift invariance", samples, worst, 1e-10)


def check_negative_control(rng, samples: int) -> CheckResult:
    """A 0.1 nudge of tau is not a whole cycle and must break equivalence."""
    false_positives = 0
    for _ in range(samples):
        q = random_time_quaternion(rng)
        nudged = TimeQuaternion(
            ComplexScalar(q.time.t, q.time.tau + 0.1), q.x, q.y, q.z
        )
        if cycle_equivalent(q, nudged, 1e-6):
            false_positives += 1
    return CheckResult("cycle negative control", samples, float(false_positives), 0.0)


def check_fundamental_domain(rng, samples: int) -> CheckResult:
    """fundamental_domain must land tau in (-pi, pi] and be idempotent."""
    worst = 0.0
    for _ in range(samples):
        t = rng.uniform(-3.0, 3.0)
        tau = rng.uniform(-100.0 * math.pi, 100.0 * math.pi)
        x, y, z = rng.uniform(-3.0, 3.0, 3)
        reduced = fundamental_domain(TimeQuaternion(ComplexScalar(t, tau), x, y, z))
        if not (-math.pi < reduced.time.tau <= math.pi):
            worst = max(worst, abs(reduced.time.tau) - math.pi, 1e-300)
        if fundamental_domain(reduced) != reduced:
            worst = max(worst, 1.0)
    return CheckResult("tau fundamental window", samples, worst, 0.0)


def run_all(samples: int = 1000, seed: int = 20260816) -> list[CheckResult]:
    """Run every check with its own derived RNG stream."""
    root = np.random.default_rng(seed)
    checks = [
        check_exp_series,
        check_exp_matrix,
        check_norm_law,
        check_periodicity,
        check_log_branches,
        check_log_roundtrip,
        check_coords_roundtrip,
        check_shift_invariance,
        check_negative_control,
        check_fundamental_domain,
    ]
    return [check(np.random.default_rng(root.integers(2**63)), samples) for check in checks]
