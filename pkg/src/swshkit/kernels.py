"""Kernel selection and the shared log-factorial table.

At import time the compiled extension is preferred; the pure-Python module
is the fallback.  Set SWSHKIT_PURE_KERNELS=1 to force the fallback (used by
the benchmark and for debugging).
"""

from __future__ import annotations

import math
import os
from functools import lru_cache

import numpy as np

from . import _dcore_py

if os.environ.get("SWSHKIT_PURE_KERNELS"):
    _impl = _dcore_py
else:
    try:
        from . import _dcore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _dcore_py

COMPILED: bool = bool(_impl.COMPILED)
IMPLEMENTATION: str = "compiled" if COMPILED else "pure-python"

DEFAULT_ELL_MAX = 64


@lru_cache(maxsize=None)
def log_factorial_table(ell_max: int = DEFAULT_ELL_MAX) -> np.ndarray:
    """Immutable table of ln((t/2)!) indexed by t = twice the argument.

    Sized so every factorial in a degree-``ell_max`` Wigner sum (arguments up
    to 2*ell_max) is covered, in half-integer steps.  Concurrent first use at
    worst recomputes the same values.
    """
    n = 4 * ell_max + 3
    table = np.array([math.lgamma(0.5 * t + 1.0) for t in range(n)])
    table.flags.writeable = False
    return table


_table = log_factorial_table  # local alias


def _table_for(two_ell: int) -> np.ndarray:
    ell_max = DEFAULT_ELL_MAX
    if two_ell > 2 * ell_max:
        ell_max = (two_ell + 1) // 2
    return _table(ell_max)


def small_d(two_ell: int, two_m: int, two_mp: int, beta: float) -> float:
    return _impl.small_d(two_ell, two_m, two_mp, beta, _table_for(two_ell))


def swsh_value(two_s: int, two_ell: int, two_m: int,
               theta: float, phi: float) -> complex:
    return _impl.swsh_value(two_s, two_ell, two_m, theta, phi,
                            _table_for(two_ell))


def dtheta_value(two_s: int, two_ell: int, two_m: int,
                 theta: float, phi: float) -> complex:
    return _impl.dtheta_value(two_s, two_ell, two_m, theta, phi,
                              _table_for(two_ell))


def mode_sum(wpow: int, dleft: bool, dright: bool,
             two_s: int, two_sp: int, two_ell: int,
             theta: float, phi: float, thetap: float, phip: float) -> complex:
    return _impl.mode_sum(wpow, dleft, dright, two_s, two_sp, two_ell,
                          theta, phi, thetap, phip, _table_for(two_ell))


def spin_phase(two_s: int) -> complex:
    """exp(i*pi*s), exact."""
    return _dcore_py.spin_phase(two_s)
