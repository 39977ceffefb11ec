"""Spin-weighted spherical harmonics and the spin raising/lowering calculus.

The harmonic of spin weight s, degree l and order m is

    Y_{s,l,m}(theta, phi) = exp(i pi s) sqrt((2l+1)/4pi) conj(D^l_{m,-s}(phi, theta, 0))

which reduces to the standard scalar harmonics at s = 0 and takes the value
exp(i pi s) delta_{s,-m} sqrt((2l+1)/4pi) at the north pole.  Derivatives are
always taken analytically through the ladder operators; finite differences
exist only as cross-checks (``edth_numeric``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .errors import DomainError
from .halfint import HalfInt, as_half_int

TWO_PI = 2.0 * math.pi

# central-difference default step and pole margins
DEFAULT_FD_STEP = 1e-5
POLE_MARGIN_FACTOR = 10.0
DE_SIN_THETA_MIN = 1e-3


@dataclass(frozen=True)
class QuantumNumbers:
    """(s, l, m) with l >= |s|, |m| <= l, and l - s, l - m integers."""

    s: HalfInt
    ell: HalfInt
    m: HalfInt

    def __post_init__(self):
        s, ell, m = self.s, self.ell, self.m
        if ell.twice < abs(s.twice):
            raise DomainError(f"need ell >= |s|, got s={s}, ell={ell}")
        if abs(m.twice) > ell.twice:
            raise DomainError(f"need |m| <= ell, got ell={ell}, m={m}")
        if (ell.twice - s.twice) % 2 or (ell.twice - m.twice) % 2:
            raise DomainError(
                f"s, ell, m must share integer/half-integer character: "
                f"s={s}, ell={ell}, m={m}"
            )


def quantum_numbers(s, ell, m) -> QuantumNumbers:
    return QuantumNumbers(as_half_int(s), as_half_int(ell), as_half_int(m))


@dataclass(frozen=True)
class Direction:
    """Point on the sphere; theta in [0, pi], phi stored reduced to [0, 2pi).

    phi is normalized once, here.  For half-integer spins the harmonics flip
    sign under phi -> phi + 2pi, so all results are functions of the stored
    representative.
    """

    theta: float
    phi: float

    def __post_init__(self):
        theta = float(self.theta)
        phi = float(self.phi)
        if not (0.0 <= theta <= math.pi):
            raise DomainError(f"theta must lie in [0, pi], got {theta}")
        if not math.isfinite(phi):
            raise DomainError(f"phi must be finite, got {phi}")
        if not (0.0 <= phi < TWO_PI):
            phi = phi % TWO_PI
            if phi >= TWO_PI:  # % can round up to the modulus
                phi = 0.0
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)


def swsh_eval(q: QuantumNumbers, dir: Direction) -> complex:
    """Y_{s,l,m} at the given direction."""
    return kernels.swsh_value(q.s.twice, q.ell.twice, q.m.twice,
                              dir.theta, dir.phi)


def swsh_pole(q: QuantumNumbers) -> complex:
    """Value at theta = phi = 0: exp(i pi s) delta_{s,-m} sqrt((2l+1)/4pi).

    Pure Kronecker-delta branch logic; no trigonometric evaluation.
    """
    if q.s.twice != -q.m.twice:
        return 0.0 + 0.0j
    amp = math.sqrt((q.ell.twice + 1) / (4.0 * math.pi))
    return kernels.spin_phase(q.s.twice) * amp


def _raise_coef(two_s: int, two_ell: int) -> float:
    # sqrt((l-s)(l+s+1))
    return 0.5 * math.sqrt((two_ell - two_s) * (two_ell + two_s + 2))


def _lower_coef(two_s: int, two_ell: int) -> float:
    # sqrt((l+s)(l-s+1))
    return 0.5 * math.sqrt((two_ell + two_s) * (two_ell - two_s + 2))


def edth_analytic(q: QuantumNumbers, dir: Direction, lower: bool = False) -> complex:
    """Spin raising (edth) or lowering (edth-bar) applied to Y_{s,l,m}.

    Raising gives sqrt((l-s)(l+s+1)) Y_{s+1,l,m}; lowering gives
    -sqrt((l+s)(l-s+1)) Y_{s-1,l,m}.  Annihilation cases return an exact 0
    by branch before any out-of-range harmonic is formed.
    """
    two_s, two_ell = q.s.twice, q.ell.twice
    if lower:
        if two_s == -two_ell:
            return 0.0 + 0.0j
        coef = -_lower_coef(two_s, two_ell)
        two_t = two_s - 2
    else:
        if two_s == two_ell:
            return 0.0 + 0.0j
        coef = _raise_coef(two_s, two_ell)
        two_t = two_s + 2
    return coef * kernels.swsh_value(two_t, two_ell, q.m.twice,
                                     dir.theta, dir.phi)


def edth_numeric(q: QuantumNumbers, dir: Direction, lower: bool = False,
                 h: float = DEFAULT_FD_STEP) -> complex:
    """Edth / edth-bar by O(h^2) central differences of the defining operator

        -(d/dtheta +- (i/sin theta) d/dphi -+ s cot theta) Y.

    Test oracle for ``edth_analytic``; needs sin(theta) >= 10 h.
    """
    if h <= 0.0:
        raise DomainError(f"step must be positive, got h={h}")
    theta, phi = dir.theta, dir.phi
    if math.sin(theta) < POLE_MARGIN_FACTOR * h:
        raise DomainError(
            f"direction too close to a pole for finite differences: "
            f"sin(theta)={math.sin(theta):.3e} < {POLE_MARGIN_FACTOR}*h"
        )
    two_s, two_ell, two_m = q.s.twice, q.ell.twice, q.m.twice

    def y(th: float, ph: float) -> complex:
        # raw evaluation: no re-normalization of phi, so the stencil never
        # crosses a branch seam for half-integer m
        return kernels.swsh_value(two_s, two_ell, two_m, th, ph)

    dth = (y(theta + h, phi) - y(theta - h, phi)) / (2.0 * h)
    dph = (y(theta, phi + h) - y(theta, phi - h)) / (2.0 * h)
    s = 0.5 * two_s
    cot = math.cos(theta) / math.sin(theta)
    if lower:
        return -(dth - 1j * dph / math.sin(theta) + s * cot * y(theta, phi))
    return -(dth + 1j * dph / math.sin(theta) - s * cot * y(theta, phi))


def dtheta(q: QuantumNumbers, dir: Direction) -> complex:
    """Analytic d/dtheta of Y_{s,l,m}: -(edth + edth-bar)/2 via the ladder."""
    return kernels.dtheta_value(q.s.twice, q.ell.twice, q.m.twice,
                                dir.theta, dir.phi)


def dphi(q: QuantumNumbers, dir: Direction) -> complex:
    """d/dphi of Y_{s,l,m}, which is i*m*Y by inspection of the phi phase."""
    return 1j * float(q.m) * swsh_eval(q, dir)


def _dtheta2(q: QuantumNumbers, dir: Direction) -> complex:
    """Second theta derivative, two passes through the ladder."""
    two_s, two_ell, two_m = q.s.twice, q.ell.twice, q.m.twice
    acc = 0.0 + 0.0j
    if two_s != two_ell:
        acc += _raise_coef(two_s, two_ell) * kernels.dtheta_value(
            two_s + 2, two_ell, two_m, dir.theta, dir.phi)
    if two_s != -two_ell:
        acc -= _lower_coef(two_s, two_ell) * kernels.dtheta_value(
            two_s - 2, two_ell, two_m, dir.theta, dir.phi)
    return -0.5 * acc


def de_residual(q: QuantumNumbers, dir: Direction) -> float:
    """|L[Y] - l(l+1) Y| for the second-order angular operator

        L = -(1/sin t) d/dt (sin t d/dt) + (s^2 - 2 i s cos t d/dphi - d^2/dphi^2)/sin^2 t

    which the harmonics diagonalize with eigenvalue l(l+1) (at s = 0 it is
    minus the sphere Laplacian).  Derivatives are built analytically from the
    ladder; d/dphi = i m.
    """
    theta = dir.theta
    st = math.sin(theta)
    if st < DE_SIN_THETA_MIN:
        raise DomainError(
            f"de_residual needs sin(theta) >= {DE_SIN_THETA_MIN}, got {st:.3e}"
        )
    s = float(q.s)
    m = float(q.m)
    ell = float(q.ell)
    y = swsh_eval(q, dir)
    dy = dtheta(q, dir)
    d2y = _dtheta2(q, dir)
    ct = math.cos(theta) / st
    angular = (s * s + 2.0 * s * m * math.cos(theta) + m * m) / (st * st)
    lhs = -(d2y + ct * dy) + angular * y
    return abs(lhs - ell * (ell + 1.0) * y)
