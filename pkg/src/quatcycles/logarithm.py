"""Quaternionic logarithm with an explicit branch index.

exp_q is 2*pi-periodic along the axis of the vector part, so its inverse is
multivalued: every nonzero quaternion q = r * (cos(theta) + n*sin(theta)) has
the logarithms ln(r) + n*(theta + 2*pi*k), one per integer k.  log_principal
picks k = 0 with theta in [0, pi]; log_branch selects any other sheet.  For
quaternions with no vector part the axis is undetermined and falls back to i
by convention, reported through the axis_defaulted flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .quaternion import Quaternion

__all__ = ["LogBranch", "log_principal", "log_branch"]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class LogBranch:
    """One sheet of the quaternionic logarithm.

    value
        The logarithm itself; its scalar part is ln(norm) and its vector
        part points along the principal axis with length theta + 2*pi*k.
    k
        Branch index the value was computed for.
    axis_defaulted
        True when the input had no vector part and the result depends on
        the conventional i axis.
    """

    value: Quaternion
    k: int
    axis_defaulted: bool


def log_branch(q: Quaternion, k: int) -> LogBranch:
    """Logarithm on branch k: ln(norm) + axis * (theta + 2*pi*k).

    theta = atan2(|vector|, q1) is the principal angle in [0, pi] and the
    axis is the normalized vector part.  A vanishing vector part leaves the
    axis undetermined; i is used, and axis_defaulted records whether that
    convention actually influenced the value.

    Raises
    ------
    DomainError
        If ``q`` is the zero quaternion.
    """
    r = math.hypot(q.q1, q.q2, q.q3, q.q4)
    if r == 0.0:
        raise DomainError("logarithm of zero quaternion")
    v = math.hypot(q.q2, q.q3, q.q4)
    theta = math.atan2(v, q.q1)
    total = theta + TWO_PI * k
    if v > 0.0:
        ax = (q.q2 / v, q.q3 / v, q.q4 / v)
        defaulted = False
    else:
        ax = (1.0, 0.0, 0.0)
        defaulted = total != 0.0
    value = Quaternion(math.log(r), ax[0] * total, ax[1] * total, ax[2] * total)
    return LogBranch(value=value, k=k, axis_defaulted=defaulted)


def log_principal(q: Quaternion) -> LogBranch:
    """Principal logarithm (branch k = 0, angle in [0, pi])."""
    return log_branch(q, 0)
