"""Spherical coordinates on R^4 covering every nonzero quaternion.

The parameterization nests two latitudes and one azimuth around the radius:

    u1 = r cos(theta1) cos(theta2) cos(theta3)
    u2 = r cos(theta1) cos(theta2) sin(theta3)
    u3 = r cos(theta1) sin(theta2)
    u4 = r sin(theta1)

with theta1, theta2 in [-pi/2, pi/2] and theta3 in (-pi, pi].  At a pole,
where a cosine factor vanishes, the downstream angles are undetermined; they
are fixed to 0 so that round trips stay deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .quaternion import Quaternion

__all__ = [
    "HypersphericalCoords",
    "wrap_angle",
    "normalize_angles",
    "to_cartesian",
    "from_cartesian",
]

TWO_PI = 2.0 * math.pi

# Cosine magnitudes at or below this are treated as exact poles.
POLE_EPS = 1e-12


@dataclass(frozen=True)
class HypersphericalCoords:
    """Radius and three nested angles of a point in R^4.

    The constructor requires a positive finite radius and finite angles.
    Angles produced by this module are always canonical (theta1, theta2 in
    [-pi/2, pi/2], theta3 in (-pi, pi]); arbitrary angles can be brought
    into the canonical window with :func:`normalize_angles`.
    """

    r: float
    theta1: float
    theta2: float
    theta3: float

    def __post_init__(self):
        for name in ("r", "theta1", "theta2", "theta3"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"coordinate {name} must be finite")
            object.__setattr__(self, name, value)
        if self.r <= 0.0:
            raise ValueError("radius must be positive")


def wrap_angle(theta: float) -> tuple[float, int]:
    """Reduce an angle into (-pi, pi].

    Returns
    -------
    (reduced, k) : tuple of float and int
        The representative in the half-open window and the whole number of
        turns removed, so that theta == reduced + 2*pi*k.
    """
    k = math.ceil((theta - math.pi) / TWO_PI)
    reduced = theta - TWO_PI * k
    # Guard the half-open boundary against rounding in the division above.
    if reduced > math.pi:
        reduced -= TWO_PI
        k += 1
    elif reduced <= -math.pi:
        reduced += TWO_PI
        k -= 1
    return reduced, k


def normalize_angles(
    theta1: float, theta2: float, theta3: float
) -> tuple[tuple[float, float, float], tuple[int, int, int]]:
    """Reduce each angle into (-pi, pi], reporting the removed turns.

    to_cartesian is invariant under the removed multiples of 2*pi, so the
    returned angles describe the same point as the inputs.
    """
    a1, k1 = wrap_angle(theta1)
    a2, k2 = wrap_angle(theta2)
    a3, k3 = wrap_angle(theta3)
    return (a1, a2, a3), (k1, k2, k3)


def to_cartesian(h: HypersphericalCoords) -> Quaternion:
    """Quaternion with components (u1, u2, u3, u4) at the given coordinates."""
    c1 = math.cos(h.theta1)
    s1 = math.sin(h.theta1)
    c2 = math.cos(h.theta2)
    s2 = math.sin(h.theta2)
    return Quaternion(
        h.r * c1 * c2 * math.cos(h.theta3),
        h.r * c1 * c2 * math.sin(h.theta3),
        h.r * c1 * s2,
        h.r * s1,
    )


def from_cartesian(q: Quaternion) -> HypersphericalCoords:
    """Coordinates of a nonzero quaternion.

    theta1 and theta2 land in [-pi/2, pi/2] and theta3 in (-pi, pi].  When a
    cosine magnitude falls at or below POLE_EPS the remaining angles are
    undetermined and set to 0.  Partial norms feed the atan2 calls directly,
    which keeps the result accurate arbitrarily close to the poles.

    Raises
    ------
    DomainError
        If ``q`` is the zero quaternion.
    """
    r = math.hypot(q.q1, q.q2, q.q3, q.q4)
    if r == 0.0:
        raise DomainError("origin has no spherical coordinates")
    h12 = math.hypot(q.q1, q.q2)
    h123 = math.hypot(q.q1, q.q2, q.q3)
    theta1 = math.atan2(q.q4, h123)
    theta2 = 0.0
    theta3 = 0.0
    if h123 / r > POLE_EPS:
        theta2 = math.atan2(q.q3, h12)
        if h12 / h123 > POLE_EPS:
            theta3 = math.atan2(q.q2, q.q1)
    return HypersphericalCoords(r, theta1, theta2, theta3)
