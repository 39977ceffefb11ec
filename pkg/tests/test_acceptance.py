"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
Criteria and tolerances are fixed here, not calibrated elsewhere.
"""

import math

import numpy as np
import pytest

import oracles
from swshkit import (
    Direction,
    HalfInt,
    TheoremId,
    coincidence_rhs,
    de_residual,
    edth_analytic,
    edth_numeric,
    euler_consistency_residual,
    lhs_sum,
    log_factorial_half,
    quantum_numbers,
    relative_euler,
    rhs_closed,
    spinsame_rhs,
    swsh_eval,
    swsh_pole,
    theorem_params,
    verify,
    wigner_small_d,
)
from swshkit import kernels
from swshkit.cli import main
from swshkit.theorems import sample_directions

SEED = 42
TWO_SMAX = 4   # 2|s| <= 4
TWO_LMAX = 16  # 2l <= 16


def _report(num: int, name: str, passed: bool, detail: str) -> None:
    verdict = "PASS" if passed else "FAIL"
    print(f"criterion {num} ({name}): {verdict} [{detail}]", flush=True)
    assert passed, f"criterion {num} ({name}): {detail}"


def spin_cells():
    """All (s, s', l) with 2s, 2s' in [-4, 4], s - s' integer, 2l <= 16."""
    for two_s in range(-TWO_SMAX, TWO_SMAX + 1):
        for two_sp in range(-TWO_SMAX, TWO_SMAX + 1):
            if (two_s - two_sp) % 2:
                continue
            lo = max(abs(two_s), abs(two_sp))
            lo += (two_s - lo) % 2
            for two_ell in range(lo, TWO_LMAX + 1, 2):
                yield theorem_params(HalfInt(two_s), HalfInt(two_sp),
                                     HalfInt(two_ell))


def quantum_grid():
    for two_s in range(-TWO_SMAX, TWO_SMAX + 1):
        for two_ell in range(abs(two_s), TWO_LMAX + 1, 2):
            for two_m in range(-two_ell, two_ell + 1, 2):
                yield quantum_numbers(HalfInt(two_s), HalfInt(two_ell),
                                      HalfInt(two_m))


def _run_two_point(theorems, tol_unit, samples):
    worst = 0.0
    ok = True
    for tid in theorems:
        for p in spin_cells():
            tol = tol_unit * (p.ell.twice + 1)
            rep = verify(tid, p, samples=samples, tol=tol, seed=SEED)
            worst = max(worst, rep.max_abs_residual / (p.ell.twice + 1))
            ok = ok and rep.passed
    return ok, worst


def test_criterion_1_base_addition_theorem():
    ok, worst = _run_two_point([TheoremId.BASE], 1e-9, samples=100)
    _report(1, "base addition theorem", ok,
            f"max residual/(2l+1) = {worst:.3e}, tol 1e-9")


def test_criterion_2_five_derivative_theorems():
    ids = [TheoremId.DTHETA_LEFT, TheoremId.M_WEIGHT, TheoremId.DTHETA_BOTH,
           TheoremId.M2_WEIGHT, TheoremId.M_DTHETA]
    ok, worst = _run_two_point(ids, 1e-8, samples=100)
    _report(2, "five weighted/derivative addition theorems", ok,
            f"max residual/(2l+1) = {worst:.3e}, tol 1e-8")


def test_criterion_3_coincidence_corollaries():
    worst = 0.0
    ok = True
    for tid in TheoremId:
        for p in spin_cells():
            tol = 1e-9 * (p.ell.twice + 1)
            rep = verify(tid, p, samples=50, tol=tol, seed=SEED,
                         mode="coincidence")
            worst = max(worst, rep.max_abs_residual / (p.ell.twice + 1))
            ok = ok and rep.passed
    _report(3, "coincidence corollaries", ok,
            f"max residual/(2l+1) = {worst:.3e}, tol 1e-9")


def test_criterion_4_spin_equal_corollaries():
    worst = 0.0
    ok = True
    for tid in TheoremId:
        for two_s in range(-TWO_SMAX, TWO_SMAX + 1):
            for two_ell in range(abs(two_s), TWO_LMAX + 1, 2):
                p = theorem_params(HalfInt(two_s), HalfInt(two_s),
                                   HalfInt(two_ell))
                tol = 1e-10 * (two_ell + 1)
                rep = verify(tid, p, samples=50, tol=tol, seed=SEED,
                             mode="spinsame")
                worst = max(worst, rep.max_abs_residual / (two_ell + 1))
                ok = ok and rep.passed

    # s = 0 reduces to the scalar-harmonic closed forms
    rng = np.random.default_rng(SEED)
    unphase = kernels.spin_phase(0)
    for two_ell in range(0, TWO_LMAX + 1, 2):
        ell = two_ell / 2
        u = (two_ell + 1) / (4 * math.pi)
        p = theorem_params(0, 0, HalfInt(two_ell))
        for d in sample_directions(rng, 5):
            st2 = math.sin(d.theta) ** 2
            scalar = {
                TheoremId.DTHETA_LEFT: 0.0,
                TheoremId.M_WEIGHT: 0.0,
                TheoremId.DTHETA_BOTH: u * ell * (ell + 1) / 2,
                TheoremId.M2_WEIGHT: u * ell * (ell + 1) * st2 / 2,
                TheoremId.M_DTHETA: 0.0,
            }
            for tid, want in scalar.items():
                got = unphase * lhs_sum(tid, p, d, d)
                err = abs(got - want)
                worst = max(worst, err / (two_ell + 1))
                ok = ok and err <= 1e-10 * (two_ell + 1)
    _report(4, "spin-equal corollaries incl. scalar reduction", ok,
            f"max residual/(2l+1) = {worst:.3e}, tol 1e-10")


def test_criterion_5_pole_values():
    d = Direction(1e-9, 1e-9)
    worst = 0.0
    ok = True
    for q in quantum_grid():
        err = abs(swsh_eval(q, d) - swsh_pole(q))
        worst = max(worst, err)
        ok = ok and err < 1e-6
        # branch exactness
        if q.s.twice != -q.m.twice:
            ok = ok and swsh_pole(q) == 0.0
        else:
            amp = math.sqrt((q.ell.twice + 1) / (4 * math.pi))
            ok = ok and swsh_pole(q) == kernels.spin_phase(q.s.twice) * amp
    _report(5, "pole values", ok, f"max |eval - pole| = {worst:.3e}, tol 1e-6")


def test_criterion_6_operator_cross_checks():
    rng = np.random.default_rng(SEED)
    worst_edth = 0.0
    worst_de_scaled = 0.0
    ok = True
    for q in quantum_grid():
        scale = math.sqrt(q.ell.twice + 1.0)
        for _ in range(2):
            z = rng.uniform(-1.0, 1.0)
            theta = math.acos(z)
            if math.sin(theta) < 1e-2:
                continue
            d = Direction(theta, rng.uniform(0, 2 * math.pi))
            for lower in (False, True):
                err = abs(edth_analytic(q, d, lower)
                          - edth_numeric(q, d, lower, h=1e-5)) / scale
                worst_edth = max(worst_edth, err)
                ok = ok and err <= 1e-6

    for q in quantum_grid():
        ell = float(q.ell)
        bound = 1e-9 * ell * (ell + 1.0) * math.sqrt(q.ell.twice + 1.0)
        for _ in range(50):
            z = rng.uniform(-1.0, 1.0)
            theta = math.acos(z)
            if math.sin(theta) < 1e-3:
                continue
            r = de_residual(q, Direction(theta, rng.uniform(0, 2 * math.pi)))
            ok = ok and r <= max(bound, 0.0)
            if bound > 0:
                worst_de_scaled = max(worst_de_scaled, r / bound)
    _report(6, "edth numeric cross-check and DE residual", ok,
            f"max edth rel err = {worst_edth:.3e} (tol 1e-6), "
            f"max DE residual/bound = {worst_de_scaled:.3e}")


def test_criterion_7_euler_geometry():
    rng = np.random.default_rng(SEED)
    ok = True
    worst = 0.0
    checked = 0
    while checked < 1000:
        d, dp = sample_directions(rng, 2)
        dphi = d.phi - dp.phi
        if abs(dphi - math.pi * round(dphi / math.pi)) < 1e-6:
            continue
        res = euler_consistency_residual(d, dp, relative_euler(d, dp))
        worst = max(worst, res)
        ok = ok and res <= 1e-9
        checked += 1

    for d in (Direction(0.7, 1.1), Direction(0.0, 0.0), Direction(3.0, 6.0)):
        eu = relative_euler(d, d)
        ok = ok and (eu.alpha, eu.beta, eu.gamma) == (0.0, 0.0, 0.0)

    # gimbal-lock configurations still satisfy the base addition identity
    worst_gimbal = 0.0
    for p in (theorem_params(1, 0, 2), theorem_params("1/2", "1/2", "3/2"),
              theorem_params(2, -2, 4)):
        tol = 1e-9 * (p.ell.twice + 1)
        for dph in (0.0, math.pi, -math.pi):
            for _ in range(20):
                th = rng.uniform(0.05, math.pi - 0.05)
                ph = rng.uniform(0, 2 * math.pi)
                d = Direction(th, ph)
                dp = Direction(rng.uniform(0.05, math.pi - 0.05), ph + dph)
                r = abs(lhs_sum(TheoremId.BASE, p, d, dp)
                        - rhs_closed(TheoremId.BASE, p, d, dp))
                worst_gimbal = max(worst_gimbal, r / (p.ell.twice + 1))
                ok = ok and r <= tol
    _report(7, "Euler-angle geometry", ok,
            f"max cot/cos residual = {worst:.3e} (tol 1e-9), coincidence exact, "
            f"gimbal residual/(2l+1) = {worst_gimbal:.3e} (tol 1e-9)")


def test_criterion_8_wigner_substrate():
    rng = np.random.default_rng(SEED)
    ok = True
    worst_u = 0.0
    for two_ell in range(0, TWO_LMAX + 1):
        for _ in range(4):
            beta = rng.uniform(-math.pi, math.pi)
            for two_m in range(-two_ell, two_ell + 1, 2):
                total = sum(
                    wigner_small_d(HalfInt(two_ell), HalfInt(two_m),
                                   HalfInt(two_mp), beta) ** 2
                    for two_mp in range(-two_ell, two_ell + 1, 2))
                err = abs(total - 1.0)
                worst_u = max(worst_u, err / (two_ell + 1))
                ok = ok and err <= 1e-12 * (two_ell + 1)

    for two_ell in (0, 1, 2, 5, 9, 16):
        for two_m in range(-two_ell, two_ell + 1, 2):
            for two_mp in range(-two_ell, two_ell + 1, 2):
                got = wigner_small_d(HalfInt(two_ell), HalfInt(two_m),
                                     HalfInt(two_mp), 0.0)
                ok = ok and got == (1.0 if two_m == two_mp else 0.0)

    worst_lf = 0.0
    for twice in range(0, 4 * kernels.DEFAULT_ELL_MAX + 1):
        got = log_factorial_half(HalfInt(twice))
        want = oracles.log_factorial(twice)
        err = abs(got - want) / max(abs(want), 1.0)
        worst_lf = max(worst_lf, err)
        ok = ok and err <= 1e-13
    _report(8, "Wigner substrate", ok,
            f"unitarity/(2l+1) = {worst_u:.3e} (tol 1e-12), identity branch-"
            f"exact, log-factorial vs 50-digit oracle rel = {worst_lf:.3e}")


def test_criterion_9_cli_determinism(capsys, monkeypatch):
    monkeypatch.delenv("SWSHKIT_SEED", raising=False)
    argv = ["verify", "--samples", "100", "--seed", "42"]
    status1 = main(list(argv))
    out1 = capsys.readouterr().out
    status2 = main(list(argv))
    out2 = capsys.readouterr().out
    ok = (status1 == 0 and status2 == 0
          and out1.encode() == out2.encode() and len(out1) > 0)
    _report(9, "CLI determinism on the default grid", ok,
            f"exit codes {status1}/{status2}, "
            f"byte-identical = {out1 == out2}, reports = {len(out1.splitlines())}")
