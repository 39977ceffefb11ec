"""Azimuthal addition identities: brute-force mode sums, closed-form right
sides, coincidence and equal-spin reductions, and a seeded verifier.

Six identities are covered.  Writing Y for the spin-s harmonic at
(theta, phi), Y' for the spin-s' one at (theta', phi'), each identity states
that the m-sum

    L = exp(i pi s) * sum_m w(m) A_m conj(B'_m)

equals a short combination of harmonics of the relative Euler angles:

    id           w(m)   A_m          B'_m
    BASE         1      Y            Y'
    DTHETA_LEFT  1      dY/dtheta    Y'
    M_WEIGHT     m      Y            Y'
    DTHETA_BOTH  1      dY/dtheta    dY'/dtheta'
    M2_WEIGHT    m^2    Y            Y'
    M_DTHETA     m      dY/dtheta    Y'

``lhs_sum`` computes L literally; ``rhs_closed`` evaluates the closed form.
``coincidence_rhs`` / ``spinsame_rhs`` give the reduced closed forms at
coincident directions (and equal spins); those reductions are conventionally
stated without the exp(i pi s) prefactor, so the verifier compares them
against exp(-i pi s) * lhs_sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .errors import DomainError
from .geometry import EulerAngles, relative_euler
from .halfint import HalfInt, as_half_int
from .harmonics import Direction

FOUR_PI = 4.0 * math.pi

# sampling exclusion band around the poles
MIN_SIN_THETA = 1e-6


class TheoremId(Enum):
    BASE = "base"
    DTHETA_LEFT = "dtheta_left"
    M_WEIGHT = "m_weight"
    DTHETA_BOTH = "dtheta_both"
    M2_WEIGHT = "m2_weight"
    M_DTHETA = "m_dtheta"


# (weight power, derivative on left factor, derivative on right factor)
_SUM_SHAPE = {
    TheoremId.BASE: (0, False, False),
    TheoremId.DTHETA_LEFT: (0, True, False),
    TheoremId.M_WEIGHT: (1, False, False),
    TheoremId.DTHETA_BOTH: (0, True, True),
    TheoremId.M2_WEIGHT: (2, False, False),
    TheoremId.M_DTHETA: (1, True, False),
}

VERIFY_MODES = ("two_point", "coincidence", "spinsame")

# default absolute tolerance per unit (2l+1), by mode (two_point is per id)
DEFAULT_TOL = {
    "two_point": {
        TheoremId.BASE: 1e-9,
        TheoremId.DTHETA_LEFT: 1e-8,
        TheoremId.M_WEIGHT: 1e-8,
        TheoremId.DTHETA_BOTH: 1e-8,
        TheoremId.M2_WEIGHT: 1e-8,
        TheoremId.M_DTHETA: 1e-8,
    },
    "coincidence": dict.fromkeys(TheoremId, 1e-9),
    "spinsame": dict.fromkeys(TheoremId, 1e-10),
}


@dataclass(frozen=True)
class TheoremParams:
    """(s, s', l) with s - s' an integer, l >= max(|s|, |s'|), l - s integer."""

    s: HalfInt
    sprime: HalfInt
    ell: HalfInt

    def __post_init__(self):
        s, sp, ell = self.s, self.sprime, self.ell
        if (s.twice - sp.twice) % 2:
            raise DomainError(f"spins must differ by an integer, got s={s}, s'={sp}")
        if ell.twice < max(abs(s.twice), abs(sp.twice)):
            raise DomainError(
                f"need ell >= max(|s|, |s'|), got s={s}, s'={sp}, ell={ell}"
            )
        if (ell.twice - s.twice) % 2:
            raise DomainError(
                f"ell must share the spins' integer/half-integer character, "
                f"got s={s}, ell={ell}"
            )


def theorem_params(s, sprime, ell) -> TheoremParams:
    return TheoremParams(as_half_int(s), as_half_int(sprime), as_half_int(ell))


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification run."""

    theorem: TheoremId
    params: TheoremParams
    mode: str
    samples: int
    max_abs_residual: float
    tolerance: float
    passed: bool
    worst_case: tuple[Direction, Direction]

    def __post_init__(self):
        if self.samples < 1:
            raise DomainError(f"need samples >= 1, got {self.samples}")
        if self.passed != (self.max_abs_residual <= self.tolerance):
            raise DomainError("pass flag inconsistent with residual/tolerance")


def lhs_sum(theorem: TheoremId, p: TheoremParams,
            dir: Direction, dirp: Direction) -> complex:
    """The literal weighted mode sum L (including the exp(i pi s) factor)."""
    wpow, dleft, dright = _SUM_SHAPE[theorem]
    total = kernels.mode_sum(wpow, dleft, dright,
                             p.s.twice, p.sprime.twice, p.ell.twice,
                             dir.theta, dir.phi, dirp.theta, dirp.phi)
    return kernels.spin_phase(p.s.twice) * total


def _amp(two_ell: int) -> float:
    return math.sqrt((two_ell + 1) / FOUR_PI)


def _raise_coef(two_s: int, two_ell: int) -> float:
    return 0.5 * math.sqrt((two_ell - two_s) * (two_ell + two_s + 2))


def _lower_coef(two_s: int, two_ell: int) -> float:
    return 0.5 * math.sqrt((two_ell + two_s) * (two_ell - two_s + 2))


def _closed_terms(theorem: TheoremId, p: TheoremParams,
                  theta: float, thetap: float):
    """Yield (coef, two_a, two_b) for the closed form

        sum_j coef_j exp(-i a_j alpha) Y_{a_j, l, b_j}(beta, gamma).

    Terms whose ladder prefactor vanishes are dropped by branch, which also
    guarantees every emitted (a_j, l, b_j) is a valid harmonic.
    """
    two_s, two_sp, two_ell = p.s.twice, p.sprime.twice, p.ell.twice
    n = _amp(two_ell)
    s = 0.5 * two_s
    sp = 0.5 * two_sp
    can_raise = two_s != two_ell          # A = sqrt((l-s)(l+s+1)) != 0
    can_lower = two_s != -two_ell         # B = sqrt((l+s)(l-s+1)) != 0
    can_raise_p = two_sp != two_ell       # A' != 0
    can_lower_p = two_sp != -two_ell      # B' != 0
    a = _raise_coef(two_s, two_ell) if can_raise else 0.0
    b = _lower_coef(two_s, two_ell) if can_lower else 0.0
    ap = _raise_coef(two_sp, two_ell) if can_raise_p else 0.0
    bp = _lower_coef(two_sp, two_ell) if can_lower_p else 0.0

    if theorem is TheoremId.BASE:
        yield n, two_s, -two_sp

    elif theorem is TheoremId.DTHETA_LEFT:
        if can_raise:
            yield 0.5 * n * a, two_s + 2, -two_sp
        if can_lower:
            yield -0.5 * n * b, two_s - 2, -two_sp

    elif theorem is TheoremId.M_WEIGHT:
        st = math.sin(theta)
        if can_raise:
            yield -0.5 * n * a * st, two_s + 2, -two_sp
        if can_lower:
            yield -0.5 * n * b * st, two_s - 2, -two_sp
        yield -n * s * math.cos(theta), two_s, -two_sp

    elif theorem is TheoremId.DTHETA_BOTH:
        if can_raise and can_raise_p:
            yield -0.25 * n * a * ap, two_s + 2, -two_sp - 2
        if can_raise and can_lower_p:
            yield 0.25 * n * a * bp, two_s + 2, -two_sp + 2
        if can_lower and can_raise_p:
            yield 0.25 * n * b * ap, two_s - 2, -two_sp - 2
        if can_lower and can_lower_p:
            yield -0.25 * n * b * bp, two_s - 2, -two_sp + 2

    elif theorem is TheoremId.M2_WEIGHT:
        st, ct = math.sin(theta), math.cos(theta)
        stp, ctp = math.sin(thetap), math.cos(thetap)
        q = -0.25 * n * st * stp
        if can_raise and can_raise_p:
            yield q * a * ap, two_s + 2, -two_sp - 2
        if can_raise and can_lower_p:
            yield q * a * bp, two_s + 2, -two_sp + 2
        if can_lower and can_raise_p:
            yield q * b * ap, two_s - 2, -two_sp - 2
        if can_lower and can_lower_p:
            yield q * b * bp, two_s - 2, -two_sp + 2
        q = 0.5 * n * sp * st * ctp
        if can_raise:
            yield q * a, two_s + 2, -two_sp
        if can_lower:
            yield q * b, two_s - 2, -two_sp
        q = -0.5 * n * s * ct * stp
        if can_raise_p:
            yield q * ap, two_s, -two_sp - 2
        if can_lower_p:
            yield q * bp, two_s, -two_sp + 2
        yield n * s * sp * ct * ctp, two_s, -two_sp

    elif theorem is TheoremId.M_DTHETA:
        # overall sign fixed against the brute-force sum (and by matching the
        # theta-derivative of the m-weighted coincidence identity); see
        # CONVENTIONS.md
        stp, ctp = math.sin(thetap), math.cos(thetap)
        q = 0.25 * n * stp
        if can_raise and can_raise_p:
            yield q * a * ap, two_s + 2, -two_sp - 2
        if can_lower and can_raise_p:
            yield -q * b * ap, two_s - 2, -two_sp - 2
        if can_raise and can_lower_p:
            yield q * a * bp, two_s + 2, -two_sp + 2
        if can_lower and can_lower_p:
            yield -q * b * bp, two_s - 2, -two_sp + 2
        q = -0.5 * n * sp * ctp
        if can_raise:
            yield q * a, two_s + 2, -two_sp
        if can_lower:
            yield -q * b, two_s - 2, -two_sp

    else:  # pragma: no cover
        raise DomainError(f"unknown theorem {theorem!r}")


def rhs_closed(theorem: TheoremId, p: TheoremParams,
               dir: Direction, dirp: Direction) -> complex:
    """Closed-form right side, evaluated at the relative Euler angles."""
    eu = relative_euler(dir, dirp)
    total = 0.0 + 0.0j
    for coef, two_a, two_b in _closed_terms(theorem, p, dir.theta, dirp.theta):
        phase = complex(math.cos(-0.5 * two_a * eu.alpha),
                        math.sin(-0.5 * two_a * eu.alpha))
        total += coef * phase * kernels.swsh_value(two_a, p.ell.twice, two_b,
                                                   eu.beta, eu.gamma)
    return total


def _quad_coef(two_x: int, two_ell: int) -> float:
    # sqrt((l-x-1)(l-x)(l+x+1)(l+x+2))
    return 0.25 * math.sqrt(
        (two_ell - two_x - 2) * (two_ell - two_x)
        * (two_ell + two_x + 2) * (two_ell + two_x + 4)
    )


def coincidence_rhs(theorem: TheoremId, p: TheoremParams,
                    dir: Direction) -> complex:
    """Closed form of the mode sum at coincident directions.

    These are the reductions of the six identities obtained by substituting
    the pole values of the harmonics; the Kronecker deltas are exact
    half-integer branches and the result is exactly 0 when none fires.
    Stated without the exp(i pi s) prefactor of ``lhs_sum``.
    """
    two_s, two_sp, two_ell = p.s.twice, p.sprime.twice, p.ell.twice
    u = (two_ell + 1) / FOUR_PI          # (2l+1)/4pi
    s = 0.5 * two_s
    sp = 0.5 * two_sp
    ell = 0.5 * two_ell
    lam = ell * (ell + 1.0)
    theta = dir.theta

    if theorem is TheoremId.BASE:
        return complex(u) if two_s == two_sp else 0.0 + 0.0j

    if theorem is TheoremId.DTHETA_LEFT:
        if two_sp == two_s + 2:
            return complex(-0.5 * u * _raise_coef(two_s, two_ell))
        if two_s == two_sp + 2:
            return complex(0.5 * u * _raise_coef(two_sp, two_ell))
        return 0.0 + 0.0j

    if theorem is TheoremId.M_WEIGHT:
        if two_sp == two_s + 2:
            return complex(0.5 * u * _raise_coef(two_s, two_ell) * math.sin(theta))
        if two_s == two_sp + 2:
            return complex(0.5 * u * _raise_coef(two_sp, two_ell) * math.sin(theta))
        if two_s == two_sp:
            return complex(-u * s * math.cos(theta))
        return 0.0 + 0.0j

    if theorem is TheoremId.DTHETA_BOTH:
        if two_s == two_sp:
            return complex(0.5 * u * (lam - s * s))
        if two_sp == two_s + 4:
            return complex(-0.25 * u * _quad_coef(two_s, two_ell))
        if two_s == two_sp + 4:
            return complex(-0.25 * u * _quad_coef(two_sp, two_ell))
        return 0.0 + 0.0j

    if theorem is TheoremId.M2_WEIGHT:
        st, ct = math.sin(theta), math.cos(theta)
        if two_s == two_sp:
            return complex(u * (0.5 * (lam - s * s) * st * st + s * s * ct * ct))
        if two_sp == two_s + 4:
            c = _raise_coef(two_s, two_ell) * _lower_coef(two_sp, two_ell)
            return complex(0.25 * u * st * st * c)
        if two_s == two_sp + 4:
            c = _lower_coef(two_s, two_ell) * _raise_coef(two_sp, two_ell)
            return complex(0.25 * u * st * st * c)
        if two_s == two_sp + 2:
            c = (2.0 * sp + 1.0) * _raise_coef(two_sp, two_ell)
            return complex(-0.5 * u * st * ct * c)
        if two_sp == two_s + 2:
            c = (2.0 * s + 1.0) * _raise_coef(two_s, two_ell)
            return complex(-0.5 * u * st * ct * c)
        return 0.0 + 0.0j

    if theorem is TheoremId.M_DTHETA:
        st, ct = math.sin(theta), math.cos(theta)
        if two_s == two_sp:
            return complex(0.5 * u * s * st)
        if two_s == two_sp + 4:
            return complex(0.25 * u * _quad_coef(two_sp, two_ell) * st)
        if two_sp == two_s + 4:
            return complex(-0.25 * u * _quad_coef(two_s, two_ell) * st)
        if two_sp == two_s + 2:
            return complex(0.5 * u * sp * _raise_coef(two_s, two_ell) * ct)
        if two_s == two_sp + 2:
            return complex(-0.5 * u * sp * _raise_coef(two_sp, two_ell) * ct)
        return 0.0 + 0.0j

    raise DomainError(f"unknown theorem {theorem!r}")  # pragma: no cover


def spinsame_rhs(theorem: TheoremId, s, ell, dir: Direction) -> complex:
    """Closed form at coincident directions and equal spins s' = s."""
    s_h, ell_h = as_half_int(s), as_half_int(ell)
    if ell_h.twice < abs(s_h.twice) or (ell_h.twice - s_h.twice) % 2:
        raise DomainError(f"invalid (s, ell) = ({s_h}, {ell_h})")
    u = (ell_h.twice + 1) / FOUR_PI
    sv = float(s_h)
    lv = float(ell_h)
    lam = lv * (lv + 1.0)
    theta = dir.theta

    if theorem is TheoremId.BASE:
        return complex(u)
    if theorem is TheoremId.DTHETA_LEFT:
        return 0.0 + 0.0j
    if theorem is TheoremId.M_WEIGHT:
        return complex(-u * sv * math.cos(theta))
    if theorem is TheoremId.DTHETA_BOTH:
        return complex(0.5 * u * (lam - sv * sv))
    if theorem is TheoremId.M2_WEIGHT:
        st, ct = math.sin(theta), math.cos(theta)
        return complex(0.5 * u * ((lam - sv * sv) * st * st
                                  + 2.0 * sv * sv * ct * ct))
    if theorem is TheoremId.M_DTHETA:
        return complex(0.5 * u * sv * math.sin(theta))
    raise DomainError(f"unknown theorem {theorem!r}")  # pragma: no cover


def sample_directions(rng: np.random.Generator, n: int) -> list[Direction]:
    """n directions uniform on the sphere, rejecting sin(theta) < 1e-6."""
    out = []
    while len(out) < n:
        z = rng.uniform(-1.0, 1.0)
        if math.sqrt(max(0.0, 1.0 - z * z)) < MIN_SIN_THETA:
            continue
        out.append(Direction(math.acos(z), rng.uniform(0.0, 2.0 * math.pi)))
    return out


def verify(theorem: TheoremId, p: TheoremParams, samples: int, tol: float,
           seed: int, mode: str = "two_point") -> CheckReport:
    """Draw seeded random directions, compare lhs_sum against the mode's
    closed form, and report the worst residual.  Deterministic per seed."""
    if samples < 1:
        raise DomainError(f"need samples >= 1, got {samples}")
    if not tol > 0.0:
        raise DomainError(f"need tol > 0, got {tol}")
    if mode not in VERIFY_MODES:
        raise DomainError(f"unknown mode {mode!r}, expected one of {VERIFY_MODES}")
    if mode == "spinsame" and p.s != p.sprime:
        raise DomainError(f"spinsame mode needs s' = s, got s={p.s}, s'={p.sprime}")

    rng = np.random.default_rng(seed)
    unphase = kernels.spin_phase(-p.s.twice)  # exp(-i pi s)

    worst = -1.0
    worst_pair = None
    if mode == "two_point":
        dirs = sample_directions(rng, 2 * samples)
        for k in range(samples):
            d, dp = dirs[2 * k], dirs[2 * k + 1]
            r = abs(lhs_sum(theorem, p, d, dp) - rhs_closed(theorem, p, d, dp))
            if r > worst:
                worst, worst_pair = r, (d, dp)
    else:
        dirs = sample_directions(rng, samples)
        for d in dirs:
            total = unphase * lhs_sum(theorem, p, d, d)
            if mode == "coincidence":
                ref = coincidence_rhs(theorem, p, d)
            else:
                ref = spinsame_rhs(theorem, p.s, p.ell, d)
            r = abs(total - ref)
            if r > worst:
                worst, worst_pair = r, (d, d)

    return CheckReport(
        theorem=theorem,
        params=p,
        mode=mode,
        samples=samples,
        max_abs_residual=worst,
        tolerance=tol,
        passed=worst <= tol,
        worst_case=worst_pair,
    )
