#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage:  python3 benchmarks/bench_kernels.py [--repeats N]

Times the three hot paths (Wigner small-d, harmonic evaluation, weighted
mode sum) and a full verification cell, and prints per-call times with the
speedup of the compiled extension.
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from swshkit import TheoremId, theorem_params, verify
from swshkit import _dcore_py
from swshkit.kernels import log_factorial_table

try:
    from swshkit import _dcore
except ImportError:
    _dcore = None

TABLE = log_factorial_table()


def time_call(fn, args_list, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / len(args_list))
    return best


def arg_sets(rng, n=2000):
    small_d_args = []
    swsh_args = []
    mode_args = []
    for _ in range(n):
        two_ell = int(rng.integers(1, 17))
        two_m = int(rng.choice(range(-two_ell, two_ell + 1, 2)))
        two_mp = int(rng.choice(range(-two_ell, two_ell + 1, 2)))
        beta = float(rng.uniform(0, math.pi))
        small_d_args.append((two_ell, two_m, two_mp, beta, TABLE))
        two_s = int(rng.choice(range(-two_ell, two_ell + 1, 2)))
        th = float(rng.uniform(0.01, math.pi - 0.01))
        ph = float(rng.uniform(0, 2 * math.pi))
        swsh_args.append((two_s, two_ell, two_m, th, ph, TABLE))
    for _ in range(n // 10):
        two_ell = 16
        thp = float(rng.uniform(0.01, math.pi - 0.01))
        php = float(rng.uniform(0, 2 * math.pi))
        th = float(rng.uniform(0.01, math.pi - 0.01))
        ph = float(rng.uniform(0, 2 * math.pi))
        mode_args.append((1, True, False, 2, 0, two_ell, th, ph, thp, php, TABLE))
    return {"small_d": small_d_args, "swsh_value": swsh_args,
            "mode_sum (l=8, m-derivative)": mode_args}


def fmt(seconds):
    if seconds < 1e-6:
        return f"{seconds * 1e9:8.1f} ns"
    if seconds < 1e-3:
        return f"{seconds * 1e6:8.2f} us"
    return f"{seconds * 1e3:8.3f} ms"


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    sets = arg_sets(rng)

    print(f"{'kernel':32s} {'pure-python':>14s} {'compiled':>14s} {'speedup':>9s}")
    for name, call_args in sets.items():
        fn_name = name.split(" ")[0]
        t_py = time_call(getattr(_dcore_py, fn_name), call_args, args.repeats)
        if _dcore is None:
            print(f"{name:32s} {fmt(t_py):>14s} {'n/a':>14s} {'n/a':>9s}")
        else:
            t_c = time_call(getattr(_dcore, fn_name), call_args, args.repeats)
            print(f"{name:32s} {fmt(t_py):>14s} {fmt(t_c):>14s} {t_py / t_c:8.1f}x")

    # end-to-end: one verification cell through whichever kernel is active
    p = theorem_params(1, -1, 8)
    t0 = time.perf_counter()
    rep = verify(TheoremId.M2_WEIGHT, p, samples=100, tol=1e-7, seed=0)
    dt = time.perf_counter() - t0
    from swshkit import IMPLEMENTATION
    print(f"\nverify cell (m2_weight, s=1, s'=-1, l=8, 100 samples) "
          f"with {IMPLEMENTATION} kernels: {dt * 1e3:.1f} ms "
          f"(residual {rep.max_abs_residual:.2e})")


if __name__ == "__main__":
    main()
