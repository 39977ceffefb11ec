"""Compiled extension vs pure-Python fallback: same numbers, same interface."""

import math

import numpy as np
import pytest

from swshkit import _dcore_py
from swshkit import kernels

_dcore = pytest.importorskip("swshkit._dcore")

TABLE = kernels.log_factorial_table()


def test_spin_phase_agreement_and_exactness():
    for two_s in range(-9, 10):
        a = _dcore.spin_phase(two_s)
        b = _dcore_py.spin_phase(two_s)
        assert a == b
        assert a in (1, 1j, -1, -1j)
    assert _dcore_py.spin_phase(1) == 1j
    assert _dcore_py.spin_phase(-1) == -1j
    assert _dcore_py.spin_phase(2) == -1


def test_small_d_agreement():
    rng = np.random.default_rng(12)
    for _ in range(300):
        two_ell = int(rng.integers(0, 17))
        if two_ell == 0:
            two_m = two_mp = 0
        else:
            two_m = int(rng.choice(range(-two_ell, two_ell + 1, 2)))
            two_mp = int(rng.choice(range(-two_ell, two_ell + 1, 2)))
        beta = float(rng.uniform(-2 * math.pi, 2 * math.pi))
        a = _dcore.small_d(two_ell, two_m, two_mp, beta, TABLE)
        b = _dcore_py.small_d(two_ell, two_m, two_mp, beta, TABLE)
        assert a == pytest.approx(b, abs=1e-14)


def test_small_d_identity_branch_both():
    assert _dcore.small_d(5, 3, 3, 0.0, TABLE) == 1.0
    assert _dcore.small_d(5, 3, 1, 0.0, TABLE) == 0.0
    assert _dcore_py.small_d(5, 3, 3, 0.0, TABLE) == 1.0
    assert _dcore_py.small_d(5, 3, 1, 0.0, TABLE) == 0.0


def test_value_kernels_agreement():
    rng = np.random.default_rng(13)
    for _ in range(100):
        two_ell = int(rng.integers(1, 13))
        two_s = int(rng.integers(-two_ell, two_ell + 1))
        two_s -= (two_s - two_ell) % 2
        two_m = int(rng.choice(range(-two_ell, two_ell + 1, 2)))
        th = float(rng.uniform(0.01, math.pi - 0.01))
        ph = float(rng.uniform(0, 2 * math.pi))
        a = _dcore.swsh_value(two_s, two_ell, two_m, th, ph, TABLE)
        b = _dcore_py.swsh_value(two_s, two_ell, two_m, th, ph, TABLE)
        assert a == pytest.approx(b, abs=1e-14)
        a = _dcore.dtheta_value(two_s, two_ell, two_m, th, ph, TABLE)
        b = _dcore_py.dtheta_value(two_s, two_ell, two_m, th, ph, TABLE)
        assert a == pytest.approx(b, abs=1e-13)


def test_mode_sum_agreement():
    rng = np.random.default_rng(14)
    shapes = [(0, False, False), (1, False, False), (2, False, False),
              (0, True, False), (0, True, True), (1, True, False)]
    for wpow, dl, dr in shapes:
        for _ in range(10):
            two_ell = int(rng.integers(1, 11))
            two_s = int(rng.integers(-two_ell, two_ell + 1))
            two_s -= (two_s - two_ell) % 2
            two_sp = int(rng.integers(-two_ell, two_ell + 1))
            two_sp -= (two_sp - two_ell) % 2
            args = (two_s, two_sp, two_ell,
                    float(rng.uniform(0.01, math.pi - 0.01)),
                    float(rng.uniform(0, 2 * math.pi)),
                    float(rng.uniform(0.01, math.pi - 0.01)),
                    float(rng.uniform(0, 2 * math.pi)))
            a = _dcore.mode_sum(wpow, dl, dr, *args, TABLE)
            b = _dcore_py.mode_sum(wpow, dl, dr, *args, TABLE)
            assert a == pytest.approx(b, abs=1e-13)


def test_selection_reports_implementation():
    assert kernels.IMPLEMENTATION in ("compiled", "pure-python")
    assert kernels.COMPILED == (kernels.IMPLEMENTATION == "compiled")


def test_table_immutable_and_correct_size():
    t = kernels.log_factorial_table()
    assert not t.flags.writeable
    assert len(t) >= 4 * kernels.DEFAULT_ELL_MAX + 1
    assert t[0] == 0.0 and t[2] == 0.0  # 0! and 1!
