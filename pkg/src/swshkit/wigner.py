"""Wigner rotation matrix elements for integer and half-integer degree.

Conventions (see CONVENTIONS.md for the calibration evidence):

    D^l_{m,m'}(alpha, beta, gamma) = exp(-i m alpha) d^l_{m,m'}(beta) exp(-i m' gamma)

with the small-d element given by the classic factorial sum whose spin-1/2
block is [[cos(b/2), -sin(b/2)], [sin(b/2), cos(b/2)]].  The small-d sum is
assembled in log space and summed in order of increasing magnitude; it is
exact at beta = 0 by branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import kernels
from .errors import DomainError
from .halfint import HalfInt, as_half_int

DEFAULT_ELL_MAX = kernels.DEFAULT_ELL_MAX


def log_factorial_half(x) -> float:
    """ln(x!) = ln Gamma(x+1) for half-integer x >= 0.

    Arguments covered by the precomputed table (x <= 2*DEFAULT_ELL_MAX) are
    served from it; larger ones fall back to a direct lgamma call.
    """
    h = as_half_int(x)
    if h.twice < 0:
        raise DomainError(f"log_factorial_half requires x >= 0, got {h}")
    table = kernels.log_factorial_table()
    if h.twice < len(table):
        return float(table[h.twice])
    return math.lgamma(float(h) + 1.0)


def _validate_indices(ell: HalfInt, m: HalfInt, mprime: HalfInt) -> None:
    if ell.twice < 0:
        raise DomainError(f"degree must be non-negative, got ell={ell}")
    if abs(m.twice) > ell.twice or abs(mprime.twice) > ell.twice:
        raise DomainError(
            f"orders must satisfy |m| <= ell, got ell={ell}, m={m}, m'={mprime}"
        )
    if (ell.twice - m.twice) % 2 or (ell.twice - mprime.twice) % 2:
        raise DomainError(
            f"ell, m, m' must all be integers or all half-integers: "
            f"ell={ell}, m={m}, m'={mprime}"
        )


@dataclass(frozen=True)
class WignerArgs:
    """Validated arguments of a big-D element D^l_{m,m'}(alpha, beta, gamma)."""

    ell: HalfInt
    m: HalfInt
    mprime: HalfInt
    angles: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        _validate_indices(self.ell, self.m, self.mprime)


def wigner_small_d(ell, m, mprime, beta: float) -> float:
    """d^l_{m,m'}(beta).  Real; |result| <= 1 up to roundoff."""
    ell, m, mprime = as_half_int(ell), as_half_int(m), as_half_int(mprime)
    _validate_indices(ell, m, mprime)
    return kernels.small_d(ell.twice, m.twice, mprime.twice, float(beta))


def wigner_big_D(args: WignerArgs) -> complex:
    """D^l_{m,m'}(alpha, beta, gamma) in the convention above."""
    alpha, beta, gamma = args.angles
    d = kernels.small_d(args.ell.twice, args.m.twice, args.mprime.twice,
                        float(beta))
    return (cmath.exp(-0.5j * args.m.twice * alpha) * d
            * cmath.exp(-0.5j * args.mprime.twice * gamma))
