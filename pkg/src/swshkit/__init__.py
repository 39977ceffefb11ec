"""swshkit: spin-weighted spherical harmonics for integer and half-integer
spin, the edth raising/lowering calculus, relative Euler-angle geometry, and
numerical verification of the azimuthal addition identities."""

from .errors import DomainError
from .halfint import HalfInt, as_half_int
from .wigner import WignerArgs, log_factorial_half, wigner_big_D, wigner_small_d
from .harmonics import (
    Direction,
    QuantumNumbers,
    de_residual,
    dphi,
    dtheta,
    edth_analytic,
    edth_numeric,
    quantum_numbers,
    swsh_eval,
    swsh_pole,
)
from .geometry import EulerAngles, euler_consistency_residual, relative_euler
from .theorems import (
    CheckReport,
    TheoremId,
    TheoremParams,
    coincidence_rhs,
    lhs_sum,
    rhs_closed,
    spinsame_rhs,
    theorem_params,
    verify,
)
from .kernels import COMPILED, IMPLEMENTATION

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "COMPILED",
    "Direction",
    "DomainError",
    "EulerAngles",
    "HalfInt",
    "IMPLEMENTATION",
    "QuantumNumbers",
    "TheoremId",
    "TheoremParams",
    "WignerArgs",
    "as_half_int",
    "coincidence_rhs",
    "de_residual",
    "dphi",
    "dtheta",
    "edth_analytic",
    "edth_numeric",
    "euler_consistency_residual",
    "lhs_sum",
    "log_factorial_half",
    "quantum_numbers",
    "relative_euler",
    "rhs_closed",
    "spinsame_rhs",
    "swsh_eval",
    "swsh_pole",
    "theorem_params",
    "verify",
    "wigner_big_D",
    "wigner_small_d",
]
