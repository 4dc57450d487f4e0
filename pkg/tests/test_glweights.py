import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fractoeplitz.errors import DomainError
from fractoeplitz.glweights import (
    dalembert_ratio,
    dalembert_ratio_printed,
    gamma_square_series,
    gamma_square_term,
    partial_sum_closed,
    weight_binomial,
    weight_partial_sum,
    weights,
)

alphas = st.floats(min_value=1.0, max_value=2.0, exclude_min=True)


def exact_weights(alpha: Fraction, count: int) -> list[Fraction]:
    out = [Fraction(1)]
    for n in range(1, count + 1):
        out.append(out[-1] * (1 - (alpha + 1) / n))
    return out


def test_weights_examples():
    np.testing.assert_allclose(weights(1.5, 3).values, [1.0, -1.5, 0.375, 0.0625], rtol=1e-15, atol=0)
    np.testing.assert_array_equal(weights(2.0, 5).values, [1, -2, 1, 0, 0, 0])
    np.testing.assert_array_equal(weights(1.5, 0).values, [1.0])


def test_weights_exact_rational():
    exact = exact_weights(Fraction(3, 2), 60)
    got = weights(1.5, 60).values
    for n, ref in enumerate(exact):
        assert got[n] == pytest.approx(float(ref), rel=1e-13)


@pytest.mark.parametrize("alpha", [1.2, 1.5, 1.8])
def test_weight_binomial_matches_recursion(alpha):
    w = weights(alpha, 200).values
    for n in (0, 1, 2, 10, 57, 200):
        assert weight_binomial(alpha, n) == pytest.approx(w[n], rel=1e-12)


def test_weight_binomial_examples():
    assert weight_binomial(1.5, 2) == pytest.approx(0.375, rel=1e-13)
    assert weight_binomial(2.0, 3) == 0.0
    assert weight_binomial(1.5, 10) == pytest.approx(weights(1.5, 10)[10], rel=1e-13)


@given(alphas, st.integers(min_value=0, max_value=300))
def test_weight_binomial_against_mpmath(alpha, n):
    ref = float((-1) ** n * mpmath.binomial(alpha, n))
    assert weight_binomial(alpha, n) == pytest.approx(ref, rel=1e-11, abs=1e-300)


@given(alphas, st.integers(min_value=2, max_value=400))
def test_weight_signs(alpha, n):
    # w_0 = 1, w_1 = -alpha < 0, all later weights positive for alpha in (1, 2)
    w = weights(alpha, n).values
    assert w[0] == 1.0 and w[1] == pytest.approx(-alpha, abs=1e-15)
    if alpha < 2.0:
        assert np.all(w[2:] > 0.0)


@given(alphas, st.integers(min_value=0, max_value=200))
def test_partial_sum_identity(alpha, N):
    assert weight_partial_sum(alpha, N) == pytest.approx(partial_sum_closed(alpha, N), abs=1e-12)


def test_partial_sum_examples():
    assert weight_partial_sum(1.5, 3) == pytest.approx(-0.0625, abs=1e-15)
    assert weight_partial_sum(2.0, 5) == 0.0
    assert abs(weight_partial_sum(1.5, 1000)) < 1e-4


def test_partial_sum_closed_against_binomial():
    for alpha in (1.2, 1.5, 1.8):
        for N in (0, 1, 5, 40):
            ref = float((-1) ** N * mpmath.binomial(alpha - 1, N))
            assert partial_sum_closed(alpha, N) == pytest.approx(ref, rel=1e-13, abs=1e-16)


def test_partial_sums_decay_like_power_law():
    # S_N ~ -N^(-alpha) / Gamma(1 - alpha): the sum of all weights is zero
    s = [abs(weight_partial_sum(1.5, N)) for N in (100, 1000, 10000)]
    assert s[0] > s[1] > s[2]
    assert s[1] / s[2] == pytest.approx(10**1.5, rel=1e-3)


def test_weights_integer_alpha_truncate():
    w = weights(2.0, 50).values
    assert np.all(w[3:] == 0.0)


def test_dalembert_examples():
    assert dalembert_ratio_printed(1.5, 2) == pytest.approx(0.140625, abs=1e-15)
    assert dalembert_ratio_printed(1.9, 2) == pytest.approx(0.103125, abs=1e-15)
    assert dalembert_ratio(1.5, 100) < 1.0


# beyond ~1e4 rounding of n + 1 - alpha itself dominates the Gamma-form oracle
@given(alphas, st.integers(min_value=2, max_value=10**4))
def test_dalembert_ratio_is_true_ratio(alpha, n):
    def a(m):
        return m * gamma_square_term(alpha, m)

    assert dalembert_ratio(alpha, n) == pytest.approx(a(n + 1) / a(n), rel=1e-10)
    assert dalembert_ratio(alpha, n) < 1.0
    assert dalembert_ratio_printed(alpha, n) <= dalembert_ratio(alpha, n)


def test_gamma_square_series_converges():
    value, N, partials = gamma_square_series(1.5, tol=1e-10)
    ref = float(
        mpmath.nsum(lambda n: (mpmath.gamma(n + 1 - 1.5) / mpmath.gamma(n + 2)) ** 2, [2, mpmath.inf])
    )
    assert abs(value - ref) < 1e-10
    assert np.all(np.diff(partials) > 0)
    assert len(partials) == N - 1


def test_domain_errors():
    for bad in (1.0, 0.5, 2.5, math.nan):
        with pytest.raises(DomainError):
            weights(bad, 3)
    with pytest.raises(DomainError):
        weights(1.5, -1)
    with pytest.raises(DomainError):
        dalembert_ratio(1.5, 1)
