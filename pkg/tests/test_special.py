import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fracseries.special import (
    gamma_real,
    gamma_ratio,
    gen_binom,
    pochhammer,
    recip_gamma,
    upsilon,
)

RECURRENCE_TOL = 1e-12
REFLECTION_TOL = 1e-11
CONVOLUTION_TOL = 1e-11

rng = np.random.default_rng(20260814)


# --- gamma_real ---------------------------------------------------------


def test_gamma_known_values():
    assert gamma_real(4.0).expect_finite() == 6.0
    assert math.isclose(gamma_real(0.5).expect_finite(), 1.7724538509055160, rel_tol=1e-15)
    assert math.isclose(gamma_real(-0.5).expect_finite(), -3.5449077018110320, rel_tol=1e-15)
    assert gamma_real(1.0).expect_finite() == 1.0


def test_gamma_poles_alternate_sign():
    # right-limit sign: +1 at 0, -1 at -1, +1 at -2, ...
    for m in range(0, 8):
        res = gamma_real(-float(m))
        assert res.is_infinite
        assert res.sign == (1 if m % 2 == 0 else -1)


def test_gamma_overflow_is_positive_infinite():
    res = gamma_real(200.0)
    assert res.is_infinite
    assert res.sign == 1


def test_gamma_recurrence_sweep():
    # gamma(x+1) == x * gamma(x) away from poles
    xs = rng.uniform(-20.0, 20.0, size=2000)
    for x in xs:
        if abs(x - round(x)) < 1e-3 and x < 0.5:
            continue
        left = gamma_real(x + 1.0)
        right = gamma_real(x)
        if left.is_infinite or right.is_infinite:
            continue
        want = x * right.value
        assert abs(left.value - want) <= RECURRENCE_TOL * abs(want)


def test_gamma_reflection_sweep():
    # gamma(x) * gamma(1-x) == pi / sin(pi x) for non-integer x
    xs = rng.uniform(-10.0, 10.0, size=2000)
    for x in xs:
        if abs(x - round(x)) < 1e-3:
            continue
        prod = gamma_real(x).expect_finite() * gamma_real(1.0 - x).expect_finite()
        want = math.pi / math.sin(math.pi * x)
        assert abs(prod - want) <= REFLECTION_TOL * abs(want)


def test_recip_gamma_zero_at_poles():
    for m in range(0, 12):
        assert recip_gamma(-float(m)) == 0.0


def test_recip_gamma_matches_inverse():
    for x in (0.3, 1.0, 2.5, 7.0, -0.5, -3.7):
        assert recip_gamma(x) == pytest.approx(1.0 / math.gamma(x), rel=1e-14)


def test_recip_gamma_overflow_underflows_to_zero():
    assert recip_gamma(500.0) == 0.0


# --- generalized binomial ------------------------------------------------


def test_gen_binom_known_values():
    assert gen_binom(3.0, 1) == 3.0
    assert gen_binom(0.5, 2) == -0.125
    assert gen_binom(2.0, 5) == 0.0
    assert gen_binom(4.2, 0) == 1.0


def test_gen_binom_integer_alpha_vanishes_exactly():
    # falling factorial crosses zero, so the result is bitwise 0.0
    for n in range(0, 6):
        for k in range(n + 1, n + 6):
            assert gen_binom(float(n), k) == 0.0


def test_gen_binom_matches_comb_for_integers():
    for n in range(0, 12):
        for k in range(0, n + 1):
            assert gen_binom(float(n), k) == float(math.comb(n, k))


def test_gen_binom_negative_k():
    with pytest.raises(ValueError):
        gen_binom(0.5, -1)


def test_binom_convolution_identity_sweep():
    # C(a, i+j) * C(i+j, j) == C(a, j) * C(a-j, i)
    alphas = rng.uniform(-5.0, 5.0, size=400)
    for alpha in alphas:
        i = int(rng.integers(0, 11))
        j = int(rng.integers(0, 11))
        left = gen_binom(alpha, i + j) * gen_binom(float(i + j), j)
        right = gen_binom(alpha, j) * gen_binom(alpha - j, i)
        scale = max(abs(left), abs(right), 1.0)
        assert abs(left - right) <= CONVOLUTION_TOL * scale


@given(
    st.floats(min_value=-5.0, max_value=5.0, allow_nan=False),
    st.integers(min_value=0, max_value=10),
    st.integers(min_value=0, max_value=10),
)
def test_binom_convolution_identity_property(alpha, i, j):
    left = gen_binom(alpha, i + j) * gen_binom(float(i + j), j)
    right = gen_binom(alpha, j) * gen_binom(alpha - j, i)
    scale = max(abs(left), abs(right), 1.0)
    assert abs(left - right) <= CONVOLUTION_TOL * scale


# --- pochhammer ----------------------------------------------------------


def test_pochhammer_examples():
    assert pochhammer(3.0, 0) == 1.0
    assert pochhammer(3.0, 2) == 12.0
    assert pochhammer(0.5, 3) == 0.5 * 1.5 * 2.5
    assert pochhammer(-2.0, 3) == 0.0


def test_pochhammer_gamma_ratio_agreement():
    for x in (0.7, 1.3, 2.5):
        for m in range(0, 6):
            want = math.gamma(x + m) / math.gamma(x)
            assert pochhammer(x, m) == pytest.approx(want, rel=1e-13)


# --- gamma_ratio ---------------------------------------------------------


def test_gamma_ratio_plain():
    assert gamma_ratio(4.0, 2.0) == pytest.approx(6.0, rel=1e-14)
    assert gamma_ratio(2.5, 2.5) == pytest.approx(1.0, rel=1e-14)


def test_gamma_ratio_denominator_pole_is_zero():
    assert gamma_ratio(2.0, -1.0) == 0.0
    assert gamma_ratio(0.5, 0.0) == 0.0


def test_gamma_ratio_numerator_pole_raises():
    with pytest.raises(ValueError):
        gamma_ratio(-2.0, 1.5)


def test_gamma_ratio_large_arguments():
    # both factors overflow individually, ratio stays modest
    want = 300.5 * 301.5
    assert gamma_ratio(302.5, 300.5) == pytest.approx(want, rel=1e-12)


def test_gamma_ratio_negative_noninteger():
    want = math.gamma(-0.5) / math.gamma(-1.5)
    assert gamma_ratio(-0.5, -1.5) == pytest.approx(want, rel=1e-13)


# --- upsilon (upper incomplete gamma) ------------------------------------


def test_upsilon_at_zero_is_gamma():
    for p in (0.5, 1.0, 2.0, 3.7):
        assert upsilon(p, 0.0) == pytest.approx(math.gamma(p), rel=1e-13)


def test_upsilon_known_values():
    assert upsilon(1.0, 2.0) == pytest.approx(math.exp(-2.0), rel=1e-13)
    assert upsilon(2.0, 1.0) == pytest.approx(2.0 * math.exp(-1.0), rel=1e-13)


def test_upsilon_strictly_decreasing_in_q():
    for p in (0.5, 1.0, 2.5):
        qs = np.linspace(0.0, 6.0, 25)
        vals = [upsilon(p, float(q)) for q in qs]
        assert all(a > b for a, b in zip(vals, vals[1:]))


def test_upsilon_recurrence():
    # Y(p+1, q) == p * Y(p, q) + q^p * exp(-q)
    for p in (0.5, 1.0, 1.8, 3.0):
        for q in (0.1, 0.5, 1.0, 4.0):
            left = upsilon(p + 1.0, q)
            right = p * upsilon(p, q) + q**p * math.exp(-q)
            assert left == pytest.approx(right, rel=1e-12)


def test_upsilon_integer_p_negative_q():
    # integer p admits any real q through the closed form
    q = -1.5
    want = math.exp(-q) * (1.0 + q)
    assert upsilon(2.0, q) == pytest.approx(want, rel=1e-13)
    assert upsilon(1.0, q) == pytest.approx(math.exp(-q), rel=1e-13)


def test_upsilon_rejects_bad_arguments():
    with pytest.raises(ValueError):
        upsilon(0.0, 1.0)
    with pytest.raises(ValueError):
        upsilon(-1.0, 1.0)
    with pytest.raises(ValueError):
        upsilon(0.5, -1.0)
