"""Quaternionic exponentials and logarithms with explicit cycle structure.

The package splits into four layers: the Hamilton algebra and exponential
with its two oracle routes (:mod:`quatcycles.quaternion`), spherical
coordinates on R^4 (:mod:`quatcycles.hyperspherical`), the branched
logarithm (:mod:`quatcycles.logarithm`), and complexified-time quaternions
whose logarithmic form is invariant under whole-cycle shifts
(:mod:`quatcycles.cycletime`).  A command line front end lives in
:mod:`quatcycles.cli`.
"""

from .cycletime import (
    ComplexScalar,
    LogEta,
    TimeQuaternion,
    canonical_distance,
    circle_distance,
    complex_exp_scalar,
    cycle_equivalent,
    eta,
    fundamental_domain,
    log_eta,
    shift_cycle,
)
from .errors import DomainError
from .hyperspherical import (
    HypersphericalCoords,
    from_cartesian,
    normalize_angles,
    to_cartesian,
    wrap_angle,
)
from .logarithm import LogBranch, log_branch, log_principal
from .quaternion import (
    Quaternion,
    UnitQuaternion,
    conj,
    exp_direction,
    exp_q,
    exp_series_oracle,
    inverse,
    matrix_exp,
    mul,
    norm,
    scalar_part,
    sinc,
    to_matrix4,
    vector_part,
)

__version__ = "0.1.0"

__all__ = [
    "ComplexScalar",
    "DomainError",
    "HypersphericalCoords",
    "LogBranch",
    "LogEta",
    "Quaternion",
    "TimeQuaternion",
    "UnitQuaternion",
    "canonical_distance",
    "circle_distance",
    "complex_exp_scalar",
    "conj",
    "cycle_equivalent",
    "eta",
    "exp_direction",
    "exp_q",
    "exp_series_oracle",
    "from_cartesian",
    "fundamental_domain",
    "inverse",
    "log_branch",
    "log_eta",
    "log_principal",
    "matrix_exp",
    "mul",
    "norm",
    "normalize_angles",
    "scalar_part",
    "shift_cycle",
    "sinc",
    "to_cartesian",
    "to_matrix4",
    "vector_part",
    "wrap_angle",
]
