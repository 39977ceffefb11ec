import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from swshkit import (
    DomainError,
    HalfInt,
    WignerArgs,
    log_factorial_half,
    wigner_big_D,
    wigner_small_d,
)

betas = st.floats(min_value=-6.2, max_value=6.2, allow_nan=False)


def test_log_factorial_trivial_values():
    assert log_factorial_half(HalfInt(0)) == 0.0
    assert log_factorial_half(1) == 0.0


def test_log_factorial_half_argument():
    # ln((1/2)!) = ln Gamma(3/2) = ln(sqrt(pi)/2); oracle value frozen at
    # 50 digits: -0.12078223763524522234...
    assert log_factorial_half(HalfInt(1)) == pytest.approx(
        -0.12078223763524522, abs=1e-15)


def test_log_factorial_matches_highprec_oracle_to_13_digits():
    for twice in range(0, 257):
        got = log_factorial_half(HalfInt(twice))
        want = oracles.log_factorial(twice)
        assert got == pytest.approx(want, rel=1e-13, abs=1e-13)


def test_log_factorial_beyond_table_and_errors():
    big = HalfInt(2 * 300)
    assert log_factorial_half(big) == pytest.approx(
        oracles.log_factorial(big.twice), rel=1e-13)
    with pytest.raises(DomainError):
        log_factorial_half(HalfInt(-1))


def test_small_d_l1_midelement_is_cos_beta():
    for beta in (0.1, 0.7, 2.0, 3.0, -1.3):
        assert wigner_small_d(1, 0, 0, beta) == pytest.approx(
            math.cos(beta), abs=1e-15)
        assert wigner_small_d(1, 0, 0, beta) == pytest.approx(
            oracles.small_d(2, 0, 0, beta), abs=1e-15)


def test_small_d_identity_at_zero_is_branch_exact():
    for ell, m, mp_ in [(2, 1, 1), (2, 1, -1), (HalfInt(5), HalfInt(3), HalfInt(3)),
                        (HalfInt(5), HalfInt(1), HalfInt(3))]:
        want = 1.0 if m == mp_ else 0.0
        assert wigner_small_d(ell, m, mp_, 0.0) == want  # exact, no rounding


def test_small_d_spin_half_diagonal():
    for beta in (0.3, 1.1, 2.9):
        got = wigner_small_d(HalfInt(1), HalfInt(1), HalfInt(1), beta)
        assert got == pytest.approx(math.cos(beta / 2), abs=1e-15)
        assert got == pytest.approx(oracles.small_d(1, 1, 1, beta), abs=1e-15)


@pytest.mark.parametrize("two_ell", [1, 2, 3, 4, 5, 7, 8, 11, 16])
def test_small_d_matches_factorial_sum_oracle(two_ell):
    rng = np.random.default_rng(two_ell)
    for _ in range(6):
        two_m = int(rng.choice(range(-two_ell, two_ell + 1, 2)))
        two_mp = int(rng.choice(range(-two_ell, two_ell + 1, 2)))
        beta = rng.uniform(-math.pi, math.pi)
        got = wigner_small_d(HalfInt(two_ell), HalfInt(two_m), HalfInt(two_mp), beta)
        want = oracles.small_d(two_ell, two_m, two_mp, beta)
        assert got == pytest.approx(want, abs=1e-13)
        assert abs(got) <= 1.0 + 1e-12


@given(betas)
@settings(max_examples=60, deadline=None)
def test_small_d_row_unitarity(beta):
    for two_ell in (2, 5, 8, 16):
        for two_m in range(-two_ell, two_ell + 1, 2):
            total = sum(
                wigner_small_d(HalfInt(two_ell), HalfInt(two_m), HalfInt(two_mp), beta) ** 2
                for two_mp in range(-two_ell, two_ell + 1, 2)
            )
            assert abs(total - 1.0) <= 1e-12 * (two_ell + 1)


@given(betas)
@settings(max_examples=40, deadline=None)
def test_small_d_transpose_symmetry(beta):
    for two_ell, two_m, two_mp in [(4, 2, -2), (5, 3, 1), (8, 0, 6), (3, -1, 3)]:
        lhs = wigner_small_d(HalfInt(two_ell), HalfInt(two_m), HalfInt(two_mp), -beta)
        rhs = wigner_small_d(HalfInt(two_ell), HalfInt(two_mp), HalfInt(two_m), beta)
        assert lhs == pytest.approx(rhs, abs=1e-13)


def test_big_d_trivial_cases():
    assert wigner_big_D(WignerArgs(HalfInt(0), HalfInt(0), HalfInt(0),
                                   (0.4, 1.2, -2.0))) == 1.0
    args = WignerArgs(HalfInt(4), HalfInt(2), HalfInt(2), (0.0, 0.0, 0.0))
    assert wigner_big_D(args) == 1.0
    args = WignerArgs(HalfInt(4), HalfInt(2), HalfInt(-2), (0.0, 0.0, 0.0))
    assert wigner_big_D(args) == 0.0


def test_big_d_row_unitarity_bruteforce():
    rng = np.random.default_rng(3)
    for two_ell in (2, 5, 8, 16):
        angles = tuple(rng.uniform(-math.pi, math.pi, 3))
        for two_m in range(-two_ell, two_ell + 1, 2):
            total = sum(
                abs(wigner_big_D(WignerArgs(HalfInt(two_ell), HalfInt(two_m),
                                            HalfInt(two_mp), angles))) ** 2
                for two_mp in range(-two_ell, two_ell + 1, 2)
            )
            assert abs(total - 1.0) <= 1e-12


def test_big_d_matches_oracle():
    rng = np.random.default_rng(11)
    for two_ell, two_m, two_mp in [(1, 1, -1), (3, 1, 3), (4, -2, 0), (6, 4, -4)]:
        angles = tuple(rng.uniform(-math.pi, math.pi, 3))
        got = wigner_big_D(WignerArgs(HalfInt(two_ell), HalfInt(two_m),
                                      HalfInt(two_mp), angles))
        want = oracles.big_d(two_ell, two_m, two_mp, *angles)
        assert got == pytest.approx(want, abs=1e-13)
        assert abs(got) <= 1.0 + 1e-12


def test_invalid_arguments_raise():
    with pytest.raises(DomainError):
        wigner_small_d(1, 2, 0, 0.5)          # |m| > ell
    with pytest.raises(DomainError):
        wigner_small_d(HalfInt(-2), 0, 0, 0.5)  # ell < 0
    with pytest.raises(DomainError):
        wigner_small_d(HalfInt(2), HalfInt(1), HalfInt(0), 0.5)  # mixed character
    with pytest.raises(DomainError):
        WignerArgs(HalfInt(2), HalfInt(4), HalfInt(0))
