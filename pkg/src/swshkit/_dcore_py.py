"""Pure-Python fallback kernels.

Same interface as the compiled extension ``swshkit._dcore``; used when the
extension is unavailable (or forced via SWSHKIT_PURE_KERNELS=1).  Quantum
numbers arrive as twice their value so all index arithmetic is on ints.
"""

from __future__ import annotations

import cmath
import math

COMPILED = False

_QUARTER_TURNS = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)


def spin_phase(two_s: int) -> complex:
    """exp(i*pi*s) for s = two_s/2, evaluated exactly (a power of i)."""
    return _QUARTER_TURNS[two_s % 4]


def small_d(two_ell: int, two_m: int, two_mp: int, beta: float, table) -> float:
    """Wigner small-d matrix element d^l_{m,m'}(beta) by direct factorial sum.

    Terms are assembled in log space (log-factorial table lookups, signs
    tracked separately) and added in order of increasing magnitude.  Exact
    branch at beta = 0.  Intrinsic term cancellation grows with l; accuracy
    is tested at l <= 8 and degrades for l beyond a few tens at mid angles.
    """
    if beta == 0.0:
        return 1.0 if two_m == two_mp else 0.0

    dab = (two_m - two_mp) >> 1  # m - m' (integer by shared character)
    half = 0.5 * beta
    ch = math.cos(half)
    sh = math.sin(half)
    log_ch = math.log(abs(ch)) if ch != 0.0 else 0.0
    log_sh = math.log(abs(sh)) if sh != 0.0 else 0.0

    k_lo = max(0, -dab)
    k_hi = min((two_ell + two_mp) >> 1, (two_ell - two_m) >> 1)
    if k_hi < k_lo:
        return 0.0

    pref = 0.5 * (
        table[two_ell + two_m]
        + table[two_ell - two_m]
        + table[two_ell + two_mp]
        + table[two_ell - two_mp]
    )

    n_pb = (two_ell + two_mp) >> 1  # l + m'
    n_ma = (two_ell - two_m) >> 1   # l - m
    terms = []
    for k in range(k_lo, k_hi + 1):
        pc = two_ell - dab - 2 * k   # cosine exponent
        ps = dab + 2 * k             # sine exponent
        if pc > 0 and ch == 0.0:
            continue
        if ps > 0 and sh == 0.0:
            continue
        lg = pref - (
            table[2 * (n_pb - k)]
            + table[2 * k]
            + table[2 * (n_ma - k)]
            + table[2 * (k + dab)]
        )
        lg += pc * log_ch + ps * log_sh
        neg = (dab + k) & 1
        if ch < 0.0 and (pc & 1):
            neg ^= 1
        if sh < 0.0 and (ps & 1):
            neg ^= 1
        terms.append((lg, -1.0 if neg else 1.0))

    if not terms:
        return 0.0
    top = max(lg for lg, _ in terms)
    terms.sort()
    acc = 0.0
    for lg, sign in terms:
        acc += sign * math.exp(lg - top)
    return acc * math.exp(top)


def swsh_value(two_s: int, two_ell: int, two_m: int,
               theta: float, phi: float, table) -> complex:
    """Spin-weighted harmonic of spin s, degree l, order m at (theta, phi)."""
    amp = math.sqrt((two_ell + 1) / (4.0 * math.pi))
    d = small_d(two_ell, two_m, -two_s, theta, table)
    return spin_phase(two_s) * amp * d * cmath.exp(0.5j * two_m * phi)


def dtheta_value(two_s: int, two_ell: int, two_m: int,
                 theta: float, phi: float, table) -> complex:
    """Analytic d/dtheta of the harmonic via the spin ladder."""
    acc = 0.0 + 0.0j
    if two_s != two_ell:
        a = 0.5 * math.sqrt((two_ell - two_s) * (two_ell + two_s + 2))
        acc += a * swsh_value(two_s + 2, two_ell, two_m, theta, phi, table)
    if two_s != -two_ell:
        b = 0.5 * math.sqrt((two_ell + two_s) * (two_ell - two_s + 2))
        acc -= b * swsh_value(two_s - 2, two_ell, two_m, theta, phi, table)
    return -0.5 * acc


def mode_sum(wpow: int, dleft: bool, dright: bool,
             two_s: int, two_sp: int, two_ell: int,
             theta: float, phi: float, thetap: float, phip: float,
             table) -> complex:
    """sum_m m^wpow * F(theta,phi) * conj(G(theta',phi')) over m = -l..l.

    F is the spin-s harmonic (or its theta derivative when dleft), G the
    spin-s' one (dright likewise).  Ascending m, Neumaier-compensated
    accumulation of real and imaginary parts.
    """
    sr = si = cr = ci = 0.0
    for two_m in range(-two_ell, two_ell + 1, 2):
        if dleft:
            a = dtheta_value(two_s, two_ell, two_m, theta, phi, table)
        else:
            a = swsh_value(two_s, two_ell, two_m, theta, phi, table)
        if dright:
            b = dtheta_value(two_sp, two_ell, two_m, thetap, phip, table)
        else:
            b = swsh_value(two_sp, two_ell, two_m, thetap, phip, table)
        t = a * b.conjugate()
        if wpow == 1:
            t *= 0.5 * two_m
        elif wpow == 2:
            t *= (0.5 * two_m) * (0.5 * two_m)

        x = t.real
        tot = sr + x
        if abs(sr) >= abs(x):
            cr += (sr - tot) + x
        else:
            cr += (x - tot) + sr
        sr = tot

        y = t.imag
        tot = si + y
        if abs(si) >= abs(y):
            ci += (si - tot) + y
        else:
            ci += (y - tot) + si
        si = tot
    return complex(sr + cr, si + ci)
