"""Relative Euler angles between two sphere directions.

Each direction (theta, phi) is assigned the rotation R = Rz(phi) Ry(theta)
that carries the north pole onto it.  ``relative_euler`` returns the zyz
angles (alpha, beta, gamma) of the relative rotation between two directions,
with the signs fixed so that the azimuthal addition identities of the
harmonics hold (the composition R1^-1 R2 with alpha and gamma negated; see
CONVENTIONS.md for the calibration).

The angles are extracted on the SU(2) level: the spin-1/2 representation of
(alpha, beta, gamma) reproduces the relative group element exactly, not just
its SO(3) projection.  beta is always in [0, pi] and gamma in (-pi, pi];
alpha may carry an extra +-2pi (the half-turn lift that keeps half-integer
spin phases correct).  Coincident inputs give (0, 0, 0) exactly by branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError
from .harmonics import Direction

TWO_PI = 2.0 * math.pi

# below this off-diagonal magnitude the zyz split is treated as gimbal
# locked: gamma is set to 0 and the whole twist folded into alpha
GIMBAL_EPS = 1e-12

# |cot| larger than this is treated as infinite in the consistency residual
COT_FINITE_MAX = 1e6

DEGENERATE_DPHI_TOL = 1e-8


@dataclass(frozen=True)
class EulerAngles:
    """zyz angles with beta in [0, pi]; see the module docstring for the
    alpha/gamma ranges and the half-integer lift carried by alpha."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        if not (0.0 <= self.beta <= math.pi):
            raise DomainError(f"beta must lie in [0, pi], got {self.beta}")


def relative_euler(dir: Direction, dirp: Direction) -> EulerAngles:
    """Euler angles of the relative rotation from ``dir`` to ``dirp``."""
    if dir.theta == dirp.theta and dir.phi == dirp.phi:
        return EulerAngles(0.0, 0.0, 0.0)

    # relative SU(2) element U = U1^dagger U2 with U_i = uz(phi_i) uy(theta_i);
    # only the first column is independent (u22 = conj(u11), u12 = -conj(u21))
    c = math.cos(0.5 * dir.theta)
    s = math.sin(0.5 * dir.theta)
    cp = math.cos(0.5 * dirp.theta)
    sp = math.sin(0.5 * dirp.theta)
    e = cmath.exp(-0.5j * (dirp.phi - dir.phi))
    u11 = c * cp * e + s * sp * e.conjugate()
    u21 = -s * cp * e + c * sp * e.conjugate()

    r11 = abs(u11)
    r21 = abs(u21)
    beta = 2.0 * math.atan2(r21, r11)

    if r21 <= GIMBAL_EPS:
        # beta ~ 0: U ~ uz(a + c); put the whole twist in alpha
        return EulerAngles(2.0 * math.atan2(u11.imag, u11.real), beta, 0.0)
    if r11 <= GIMBAL_EPS:
        # beta ~ pi: only a - c is determined
        return EulerAngles(-2.0 * math.atan2(u21.imag, u21.real), beta, 0.0)

    half_sum = -math.atan2(u11.imag, u11.real)   # (a + c)/2
    half_diff = math.atan2(u21.imag, u21.real)   # (a - c)/2
    alpha = -(half_sum + half_diff)
    gamma = -(half_sum - half_diff)
    # joint 2pi shifts preserve the SU(2) element; land gamma in (-pi, pi]
    if gamma > math.pi:
        gamma -= TWO_PI
        alpha -= TWO_PI
    elif gamma <= -math.pi:
        gamma += TWO_PI
        alpha += TWO_PI
    return EulerAngles(alpha, beta, gamma)


def _cot(x: float) -> float:
    return math.cos(x) / math.sin(x)


def euler_consistency_residual(dir: Direction, dirp: Direction,
                               eu: EulerAngles) -> float:
    """Diagnostic residual of the cot/cos relations defining the angles:

        cot(alpha) = cos(theta) cot(dphi) - cot(theta') sin(theta) csc(dphi)
        cos(beta)  = cos(theta) cos(theta') + sin(theta) sin(theta') cos(dphi)
        cot(gamma) = cos(theta') cot(dphi) - cot(theta) sin(theta') csc(dphi)

    with dphi = phi - phi'.  Valid only when dphi is not a multiple of pi;
    cot terms are compared only where both sides are finite (|cot| <= 1e6).
    """
    dphi = dir.phi - dirp.phi
    if abs(dphi - math.pi * round(dphi / math.pi)) < DEGENERATE_DPHI_TOL:
        raise DomainError(
            "the cot/cos relations are undefined when phi - phi' is a "
            f"multiple of pi (got dphi={dphi!r})"
        )
    sd = math.sin(dphi)
    cot_d = math.cos(dphi) / sd
    csc_d = 1.0 / sd
    ct, st = math.cos(dir.theta), math.sin(dir.theta)
    ctp, stp = math.cos(dirp.theta), math.sin(dirp.theta)

    res = abs(math.cos(eu.beta) - (ct * ctp + st * stp * math.cos(dphi)))

    for angle, rhs in (
        (eu.alpha, ct * cot_d - (ctp / stp) * st * csc_d if stp != 0.0 else math.inf),
        (eu.gamma, ctp * cot_d - (ct / st) * stp * csc_d if st != 0.0 else math.inf),
    ):
        if math.sin(angle) == 0.0:
            continue
        lhs = _cot(angle)
        if abs(lhs) <= COT_FINITE_MAX and math.isfinite(rhs) and abs(rhs) <= COT_FINITE_MAX:
            res = max(res, abs(lhs - rhs))
    return res
