import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from quatcycles import (
    DomainError,
    Quaternion,
    exp_q,
    log_branch,
    log_principal,
    norm,
)

TWO_PI = 2 * math.pi


def assert_quat_close(a, b, tol=1e-12):
    for x, y in zip((a.q1, a.q2, a.q3, a.q4), (b.q1, b.q2, b.q3, b.q4)):
        assert abs(x - y) <= tol


def test_principal_log_of_one():
    branch = log_principal(Quaternion(1, 0, 0, 0))
    assert branch.value == Quaternion(0, 0, 0, 0)
    assert branch.k == 0
    assert not branch.axis_defaulted


def test_principal_log_of_unit_k():
    branch = log_principal(Quaternion(0, 0, 0, 1))
    assert_quat_close(branch.value, Quaternion(0, 0, 0, math.pi / 2), tol=0.0)
    assert not branch.axis_defaulted


def test_principal_log_of_negative_one_uses_default_axis():
    branch = log_principal(Quaternion(-1, 0, 0, 0))
    assert_quat_close(branch.value, Quaternion(0, math.pi, 0, 0), tol=0.0)
    assert branch.axis_defaulted


def test_principal_log_mixed_example():
    branch = log_principal(Quaternion(0, 0, 2, 0))
    assert_quat_close(
        branch.value, Quaternion(math.log(2), 0, math.pi / 2, 0), tol=1e-15
    )


def test_branch_of_one_moves_along_default_axis():
    branch = log_branch(Quaternion(1, 0, 0, 0), 1)
    assert_quat_close(branch.value, Quaternion(0, TWO_PI, 0, 0), tol=0.0)
    assert branch.k == 1
    assert branch.axis_defaulted


def test_negative_branch_of_unit_k():
    branch = log_branch(Quaternion(0, 0, 0, 1), -1)
    assert_quat_close(
        branch.value, Quaternion(0, 0, 0, math.pi / 2 - TWO_PI), tol=1e-15
    )
    assert not branch.axis_defaulted


def test_log_of_zero_raises():
    with pytest.raises(DomainError, match="logarithm of zero quaternion"):
        log_principal(Quaternion(0, 0, 0, 0))
    with pytest.raises(DomainError, match="logarithm of zero quaternion"):
        log_branch(Quaternion(0, 0, 0, 0), 2)


def test_principal_angle_stays_in_upper_half():
    rng = np.random.default_rng(41)
    for _ in range(500):
        q = Quaternion(*rng.uniform(-3.0, 3.0, 4))
        if q.norm() == 0.0:
            continue
        value = log_principal(q).value
        angle = math.hypot(value.q2, value.q3, value.q4)
        assert 0.0 <= angle <= math.pi + 1e-15


@given(
    st.floats(min_value=-20, max_value=20, allow_nan=False, allow_infinity=False),
    st.floats(min_value=-20, max_value=20, allow_nan=False, allow_infinity=False),
    st.floats(min_value=-20, max_value=20, allow_nan=False, allow_infinity=False),
    st.floats(min_value=-20, max_value=20, allow_nan=False, allow_infinity=False),
)
def test_scalar_part_is_log_of_norm(q1, q2, q3, q4):
    q = Quaternion(q1, q2, q3, q4)
    assume(q.norm() > 1e-6)
    assert math.isclose(log_principal(q).value.q1, math.log(norm(q)), rel_tol=0, abs_tol=1e-12)


def test_adjacent_branches_differ_by_one_turn_along_axis():
    rng = np.random.default_rng(43)
    for _ in range(300):
        q = Quaternion(*rng.uniform(-3.0, 3.0, 4))
        if math.hypot(q.q2, q.q3, q.q4) < 1e-9:
            continue
        v = math.hypot(q.q2, q.q3, q.q4)
        axis = (q.q2 / v, q.q3 / v, q.q4 / v)
        for k in range(-3, 3):
            a = log_branch(q, k).value
            b = log_branch(q, k + 1).value
            along_a = a.q2 * axis[0] + a.q3 * axis[1] + a.q4 * axis[2]
            along_b = b.q2 * axis[0] + b.q3 * axis[1] + b.q4 * axis[2]
            assert abs((along_b - along_a) - TWO_PI) <= 1e-9


def test_exp_inverts_every_branch():
    rng = np.random.default_rng(47)
    for _ in range(300):
        q = Quaternion(*rng.uniform(-3.0, 3.0, 4))
        n = q.norm()
        if n == 0.0:
            continue
        for k in range(-3, 4):
            back = exp_q(log_branch(q, k).value)
            diff = math.hypot(
                back.q1 - q.q1, back.q2 - q.q2, back.q3 - q.q3, back.q4 - q.q4
            )
            assert diff / n <= 1e-10


def test_principal_log_inverts_exp_away_from_boundaries():
    rng = np.random.default_rng(53)
    for _ in range(300):
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        length = rng.uniform(0.01, math.pi - 0.01)
        q = Quaternion(rng.uniform(-3.0, 3.0), *(direction * length))
        back = log_principal(exp_q(q)).value
        assert_quat_close(back, q, tol=1e-10)
