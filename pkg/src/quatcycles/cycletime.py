"""Complexified-time quaternions and their cycle-invariant logarithmic form.

A TimeQuaternion carries the scalar t + tau*I, where I is a second imaginary
unit that commutes with the quaternion units, together with a spatial vector
part x*i + y*j + z*k.  Taking logarithms collapses the periodic content:
exp(t + tau*I) keeps t as a magnitude exponent while tau survives only as a
phase modulo 2*pi, and the spatial part survives only through the unit
quaternion its exponential produces.  log_eta packages the surviving
canonical fields plus the integer turn counts that were removed.

shift_cycle advances tau and the spatial direction angles by whole turns at
once; the canonical fields of log_eta are invariant under it, which is what
cycle_equivalent tests and what makes the family {shift_cycle(q, k)} a single
point in logarithmic terms.  fundamental_domain picks the representative of
that family with tau in (-pi, pi].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .hyperspherical import TWO_PI, from_cartesian, wrap_angle
from .quaternion import Quaternion, UnitQuaternion, exp_direction

__all__ = [
    "ComplexScalar",
    "TimeQuaternion",
    "LogEta",
    "eta",
    "complex_exp_scalar",
    "log_eta",
    "shift_cycle",
    "cycle_equivalent",
    "fundamental_domain",
    "circle_distance",
    "canonical_distance",
]


@dataclass(frozen=True)
class ComplexScalar:
    """Complexified time t + tau*I with a commuting imaginary unit I."""

    t: float
    tau: float

    def __post_init__(self):
        for name in ("t", "tau"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"time component {name} must be finite")
            object.__setattr__(self, name, value)


@dataclass(frozen=True)
class TimeQuaternion:
    """Quaternion (t + tau*I) + x*i + y*j + z*k with complexified scalar part."""

    time: ComplexScalar
    x: float
    y: float
    z: float

    def __post_init__(self):
        if not isinstance(self.time, ComplexScalar):
            raise TypeError("time must be a ComplexScalar")
        for name in ("x", "y", "z"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"spatial component {name} must be finite")
            object.__setattr__(self, name, value)


@dataclass(frozen=True)
class LogEta:
    """Canonical logarithmic form of a TimeQuaternion.

    t is kept verbatim, tau_phase is tau reduced into (-pi, pi], and
    theta1..theta3 are the spherical angles of the unit direction produced
    by exponentiating the spatial part.  wrap_counts records the whole turns
    removed from (tau, theta1, theta2, theta3); the three angle counts are
    always equal because a single 3-vector carries one shared turn count.
    """

    t: float
    tau_phase: float
    theta1: float
    theta2: float
    theta3: float
    wrap_counts: tuple[int, int, int, int]

    def canonical_fields(self) -> tuple[float, float, float, float, float]:
        """The five fields compared by cycle_equivalent, in order."""
        return (self.t, self.tau_phase, self.theta1, self.theta2, self.theta3)


def eta(time: ComplexScalar, x: float, y: float, z: float) -> TimeQuaternion:
    """Assemble a TimeQuaternion from its complexified scalar and spatial parts."""
    return TimeQuaternion(time=time, x=x, y=y, z=z)


def complex_exp_scalar(c: ComplexScalar) -> tuple[float, float]:
    """Exponential of t + tau*I in polar form.

    Returns (modulus, phase) = (e^t, tau reduced into (-pi, pi]).  The
    modulus never depends on tau, which is what makes whole turns of tau
    invisible after taking logarithms.
    """
    phase, _ = wrap_angle(c.tau)
    return (math.exp(c.t), phase)


def _unit_direction(x: float, y: float, z: float) -> UnitQuaternion:
    """Unit quaternion produced by exponentiating x*i + y*j + z*k."""
    return exp_direction(Quaternion(0.0, x, y, z))


def _shift_axis(
    x: float, y: float, z: float, direction: UnitQuaternion
) -> tuple[float, float, float]:
    """Axis along which whole turns are added to the spatial part.

    The normalized vector part of the unit direction is used when it exists;
    it is collinear with (x, y, z), so stepping along it by 2*pi leaves the
    exponential unchanged.  When the sine factor vanishes exactly the spatial
    vector's own direction is used, and the i axis for a zero spatial part.
    """
    s = math.hypot(direction.q2, direction.q3, direction.q4)
    if s > 0.0:
        return (direction.q2 / s, direction.q3 / s, direction.q4 / s)
    rho = math.hypot(x, y, z)
    if rho > 0.0:
        return (x / rho, y / rho, z / rho)
    return (1.0, 0.0, 0.0)


def _spatial_turns(
    x: float,
    y: float,
    z: float,
    direction: UnitQuaternion,
    axis: tuple[float, float, float],
) -> int:
    """Whole turns carried by the spatial vector beyond the principal angle.

    The spatial part of any TimeQuaternion with the given unit direction is
    axis * (theta0 + 2*pi*m) with theta0 in [0, pi]; this recovers m.
    """
    theta0 = math.atan2(
        math.hypot(direction.q2, direction.q3, direction.q4), direction.q1
    )
    along = x * axis[0] + y * axis[1] + z * axis[2]
    return round((along - theta0) / TWO_PI)


def log_eta(q: TimeQuaternion) -> LogEta:
    """Canonical logarithmic form: magnitude exponent, phases, turn counts.

    The direction angles are the spherical coordinates of the unit
    quaternion exp(x*i + y*j + z*k), so they only see the spatial part
    modulo whole turns; the removed turns land in wrap_counts alongside the
    turns removed from tau.
    """
    tau_phase, k_tau = wrap_angle(q.time.tau)
    direction = _unit_direction(q.x, q.y, q.z)
    coords = from_cartesian(direction)
    axis = _shift_axis(q.x, q.y, q.z, direction)
    m = _spatial_turns(q.x, q.y, q.z, direction, axis)
    return LogEta(
        t=q.time.t,
        tau_phase=tau_phase,
        theta1=coords.theta1,
        theta2=coords.theta2,
        theta3=coords.theta3,
        wrap_counts=(k_tau, m, m, m),
    )


def shift_cycle(q: TimeQuaternion, k: int) -> TimeQuaternion:
    """Advance tau and the spatial direction angles by k whole turns.

    The spatial step goes along the direction's principal axis, which is
    collinear with the spatial vector, so the unit direction is unchanged
    and the canonical fields of log_eta(result) equal those of log_eta(q);
    only the turn counts move, all four by k together.
    """
    if k == 0:
        return q
    direction = _unit_direction(q.x, q.y, q.z)
    axis = _shift_axis(q.x, q.y, q.z, direction)
    step = TWO_PI * k
    return TimeQuaternion(
        time=ComplexScalar(q.time.t, q.time.tau + step),
        x=q.x + step * axis[0],
        y=q.y + step * axis[1],
        z=q.z + step * axis[2],
    )


def circle_distance(a: float, b: float) -> float:
    """Distance between two angles on the circle of circumference 2*pi."""
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def canonical_distance(a: LogEta, b: LogEta) -> float:
    """Largest disagreement between two canonical forms.

    t, theta1 and theta2 compare by plain absolute difference; tau_phase and
    theta3 live on a circle, so they compare by circular distance to keep
    representatives adjacent to the (-pi, pi] boundary close together.
    """
    return max(
        abs(a.t - b.t),
        circle_distance(a.tau_phase, b.tau_phase),
        abs(a.theta1 - b.theta1),
        abs(a.theta2 - b.theta2),
        circle_distance(a.theta3, b.theta3),
    )


def cycle_equivalent(a: TimeQuaternion, b: TimeQuaternion, tol: float) -> bool:
    """True when the canonical logarithmic forms agree within tol.

    Turn counts are deliberately ignored: two TimeQuaternions any whole
    number of cycles apart are equivalent.  The relation is reflexive and
    symmetric at any tol, and transitive up to a doubling of tol.

    Raises
    ------
    ValueError
        If ``tol`` is not positive.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    return canonical_distance(log_eta(a), log_eta(b)) <= tol


def fundamental_domain(q: TimeQuaternion) -> TimeQuaternion:
    """The shift-equivalent representative whose tau lies in (-pi, pi].

    Applying it twice returns the first result unchanged, and the boundary
    maps to +pi (a tau of exactly 3*pi comes back as pi, not -pi).
    """
    reduced, k = wrap_angle(q.time.tau)
    if k == 0:
        return q
    shifted = shift_cycle(q, -k)
    # Reuse the reduced tau so the result sits in the window exactly.
    return TimeQuaternion(
        time=ComplexScalar(shifted.time.t, reduced),
        x=shifted.x,
        y=shifted.y,
        z=shifted.z,
    )
