# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Wigner small-d factorial sums, spin-weighted harmonic
values, ladder theta-derivatives, and weighted azimuthal mode sums.

Mirrors ``swshkit._dcore_py``; quantum numbers are passed as twice their
value, the log-factorial table is indexed by twice the factorial argument.
"""

from libc.math cimport cos, sin, sqrt, log, exp, fabs, M_PI

COMPILED = True

# Generous bound on the number of factorial-sum terms (2l + 1 <= _MAXK).
DEF _MAXK = 1300


cdef inline double complex _spin_phase(int two_s) noexcept nogil:
    cdef int r = two_s % 4
    if r < 0:
        r += 4
    if r == 0:
        return 1.0
    elif r == 1:
        return 1.0j
    elif r == 2:
        return -1.0
    return -1.0j


cdef double _small_d(int two_ell, int two_m, int two_mp, double beta,
                     const double[::1] table) noexcept nogil:
    cdef int dab, k_lo, k_hi, n_pb, n_ma, k, pc, ps, n, i, j, neg
    cdef double half, ch, sh, log_ch, log_sh, pref, lg, top, acc, key_l, key_s
    cdef double logs[_MAXK]
    cdef double signs[_MAXK]

    if beta == 0.0:
        return 1.0 if two_m == two_mp else 0.0

    dab = (two_m - two_mp) >> 1
    half = 0.5 * beta
    ch = cos(half)
    sh = sin(half)
    log_ch = log(fabs(ch)) if ch != 0.0 else 0.0
    log_sh = log(fabs(sh)) if sh != 0.0 else 0.0

    k_lo = max(0, -dab)
    k_hi = min((two_ell + two_mp) >> 1, (two_ell - two_m) >> 1)
    if k_hi < k_lo:
        return 0.0

    pref = 0.5 * (table[two_ell + two_m] + table[two_ell - two_m]
                  + table[two_ell + two_mp] + table[two_ell - two_mp])
    n_pb = (two_ell + two_mp) >> 1
    n_ma = (two_ell - two_m) >> 1

    n = 0
    for k in range(k_lo, k_hi + 1):
        pc = two_ell - dab - 2 * k
        ps = dab + 2 * k
        if pc > 0 and ch == 0.0:
            continue
        if ps > 0 and sh == 0.0:
            continue
        lg = pref - (table[2 * (n_pb - k)] + table[2 * k]
                     + table[2 * (n_ma - k)] + table[2 * (k + dab)])
        lg += pc * log_ch + ps * log_sh
        neg = (dab + k) & 1
        if ch < 0.0 and (pc & 1):
            neg ^= 1
        if sh < 0.0 and (ps & 1):
            neg ^= 1
        logs[n] = lg
        signs[n] = -1.0 if neg else 1.0
        n += 1

    if n == 0:
        return 0.0

    # insertion sort ascending in magnitude; n <= 2l + 1 stays small
    for i in range(1, n):
        key_l = logs[i]
        key_s = signs[i]
        j = i - 1
        while j >= 0 and logs[j] > key_l:
            logs[j + 1] = logs[j]
            signs[j + 1] = signs[j]
            j -= 1
        logs[j + 1] = key_l
        signs[j + 1] = key_s

    top = logs[n - 1]
    acc = 0.0
    for i in range(n):
        acc += signs[i] * exp(logs[i] - top)
    return acc * exp(top)


cdef double complex _cis(double x) noexcept nogil:
    return cos(x) + 1.0j * sin(x)


cdef double complex _swsh(int two_s, int two_ell, int two_m,
                          double theta, double phi,
                          const double[::1] table) noexcept nogil:
    cdef double amp = sqrt((two_ell + 1) / (4.0 * M_PI))
    cdef double d = _small_d(two_ell, two_m, -two_s, theta, table)
    return _spin_phase(two_s) * amp * d * _cis(0.5 * two_m * phi)


cdef double complex _dtheta(int two_s, int two_ell, int two_m,
                            double theta, double phi,
                            const double[::1] table) noexcept nogil:
    cdef double complex acc = 0.0
    cdef double a, b
    if two_s != two_ell:
        a = 0.5 * sqrt(<double>((two_ell - two_s) * (two_ell + two_s + 2)))
        acc = acc + a * _swsh(two_s + 2, two_ell, two_m, theta, phi, table)
    if two_s != -two_ell:
        b = 0.5 * sqrt(<double>((two_ell + two_s) * (two_ell - two_s + 2)))
        acc = acc - b * _swsh(two_s - 2, two_ell, two_m, theta, phi, table)
    return -0.5 * acc


def small_d(int two_ell, int two_m, int two_mp, double beta,
            const double[::1] table):
    if two_ell + 1 > 2 * _MAXK - 1:
        raise ValueError("degree too large for the compiled kernel")
    return _small_d(two_ell, two_m, two_mp, beta, table)


def swsh_value(int two_s, int two_ell, int two_m, double theta, double phi,
               const double[::1] table):
    return _swsh(two_s, two_ell, two_m, theta, phi, table)


def dtheta_value(int two_s, int two_ell, int two_m, double theta, double phi,
                 const double[::1] table):
    return _dtheta(two_s, two_ell, two_m, theta, phi, table)


def mode_sum(int wpow, bint dleft, bint dright,
             int two_s, int two_sp, int two_ell,
             double theta, double phi, double thetap, double phip,
             const double[::1] table):
    """sum_m m^wpow * F(theta,phi) * conj(G(theta',phi')), Neumaier-compensated."""
    cdef double sr = 0.0, si = 0.0, cr = 0.0, ci = 0.0
    cdef double x, y, tot, w
    cdef double complex a, b, t
    cdef int two_m
    for two_m in range(-two_ell, two_ell + 1, 2):
        if dleft:
            a = _dtheta(two_s, two_ell, two_m, theta, phi, table)
        else:
            a = _swsh(two_s, two_ell, two_m, theta, phi, table)
        if dright:
            b = _dtheta(two_sp, two_ell, two_m, thetap, phip, table)
        else:
            b = _swsh(two_sp, two_ell, two_m, thetap, phip, table)
        t = a * b.conjugate()
        if wpow == 1:
            t = t * (0.5 * two_m)
        elif wpow == 2:
            w = 0.5 * two_m
            t = t * (w * w)

        x = t.real
        tot = sr + x
        if fabs(sr) >= fabs(x):
            cr += (sr - tot) + x
        else:
            cr += (x - tot) + sr
        sr = tot

        y = t.imag
        tot = si + y
        if fabs(si) >= fabs(y):
            ci += (si - tot) + y
        else:
            ci += (y - tot) + si
        si = tot
    return complex(sr + cr, si + ci)


def spin_phase(int two_s):
    """exp(i*pi*s) for s = two_s/2, exact (a power of i)."""
    return _spin_phase(two_s)
