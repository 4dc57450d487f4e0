import io
import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fractoeplitz.errors import DomainError
from fractoeplitz.specfun import CATALAN, EULER_GAMMA, harmonic, lobachevsky
from fractoeplitz.szego import (
    AsymptoteRow,
    SzegoCoefficients,
    asymptote_study,
    euler_factor,
    gaussian_coeffs,
    holtsmark_c0,
    holtsmark_digamma_line,
    holtsmark_discrepancy,
    holtsmark_firstline,
    logf_coeff0_closed,
    logf_coeff_closed,
    logf_coeff_quadrature,
    rows_to_csv,
    szego_coefficients,
    szego_constants,
    szego_report,
)

LN2 = math.log(2.0)


def mp_logf_coeff(alpha, k, shifted=True):
    """Independent oracle: tanh-sinh quadrature of the shifted log-symbol."""
    c = 1 - mpmath.mpf(alpha) / 2

    def f(t):
        return (alpha * mpmath.log(2 * mpmath.cos(t / 2)) + mpmath.log(mpmath.cos(c * t))) * mpmath.cos(k * t)

    with mpmath.workdps(30):
        value = float(mpmath.quad(f, [0, mpmath.pi]) / mpmath.pi)
    return value if shifted else (-1) ** k * value


@pytest.mark.parametrize("alpha", [1.2, 1.5, 1.8])
@pytest.mark.parametrize("k", [0, 1, 2, 7, 20])
def test_quadrature_against_mpmath(alpha, k):
    assert logf_coeff_quadrature(alpha, k) == pytest.approx(mp_logf_coeff(alpha, k), abs=1e-11)


def test_gaussian_quadrature_examples():
    assert abs(logf_coeff_quadrature(2.0, 0)) < 1e-12
    assert logf_coeff_quadrature(2.0, 3) == pytest.approx(1 / 3, abs=1e-11)
    assert logf_coeff_quadrature(2.0, 3, shifted=False) == pytest.approx(-1 / 3, abs=1e-11)


def test_holtsmark_c0_values():
    # dimensionless symbol: 2G/pi - ln 2
    assert logf_coeff_quadrature(1.5, 0) == pytest.approx(2 * CATALAN / math.pi - LN2, abs=1e-11)
    # K = 1 normalization, scale = 1/|cos(3 pi/4)| = sqrt 2
    assert holtsmark_c0(1.0) == pytest.approx(-0.5 * LN2 + 2 * CATALAN / math.pi, abs=1e-15)
    assert holtsmark_c0(1.0) == pytest.approx(0.2365482, abs=1e-7)
    assert logf_coeff0_closed(1.5, math.sqrt(2.0)) == pytest.approx(holtsmark_c0(1.0), abs=1e-10)


def test_c0_closed_examples():
    assert logf_coeff0_closed(1.5) == pytest.approx(-4 / math.pi * lobachevsky(math.pi / 4), abs=1e-14)
    assert logf_coeff0_closed(2.0) == 0.0
    assert logf_coeff0_closed(1.9999999) == pytest.approx(0.0, abs=1e-6)
    assert logf_coeff0_closed(1.5, math.e) == pytest.approx(logf_coeff0_closed(1.5) + 1.0, abs=1e-14)


@pytest.mark.parametrize("alpha", [1.05 + 0.1 * i for i in range(9)])
def test_c0_closed_vs_quadrature(alpha):
    assert logf_coeff0_closed(alpha) == pytest.approx(logf_coeff_quadrature(alpha, 0), abs=1e-9)


@settings(max_examples=20, deadline=None)
@given(st.floats(min_value=1.01, max_value=1.99), st.integers(min_value=1, max_value=30))
def test_closed_matches_quadrature(alpha, k):
    assert logf_coeff_closed(alpha, k) == pytest.approx(logf_coeff_quadrature(alpha, k), abs=1e-9)


def test_closed_examples():
    assert logf_coeff_closed(1.5, 1) == pytest.approx(0.75 - 0.25 + 1 / math.pi, abs=1e-10)
    assert logf_coeff_closed(1.5, 4) == pytest.approx(logf_coeff_quadrature(1.5, 4), abs=1e-8)
    for k in (1, 2, 5):
        assert logf_coeff_closed(2.0, k) == (-1) ** (k + 1) / k
        assert logf_coeff_closed(1.9999999, k) == pytest.approx((-1) ** (k + 1) / k, abs=1e-6)


@given(st.floats(min_value=1.01, max_value=2.0), st.integers(min_value=1, max_value=12))
@settings(max_examples=15, deadline=None)
def test_shift_rule(alpha, k):
    assert logf_coeff_closed(alpha, k, shifted=False) == pytest.approx((-1) ** k * logf_coeff_closed(alpha, k), abs=1e-15)
    assert logf_coeff_quadrature(alpha, k, shifted=False) == pytest.approx(
        (-1) ** k * logf_coeff_quadrature(alpha, k), abs=1e-11
    )


def test_gaussian_coeffs():
    assert gaussian_coeffs(7) == pytest.approx(-1 / 7, abs=1e-15)
    assert gaussian_coeffs(7, shifted=True) == pytest.approx(1 / 7, abs=1e-15)
    assert gaussian_coeffs(0, scale=3.0) == math.log(3.0)


def test_holtsmark_firstline():
    assert holtsmark_firstline(1) == pytest.approx(0.75 - 0.25 + 1 / math.pi, abs=1e-15)
    assert holtsmark_firstline(2) == pytest.approx(-3 / 8 - (math.pi / 4 - 2 / 3) / (2 * math.pi), abs=1e-15)
    assert holtsmark_firstline(2) == pytest.approx(-0.39390, abs=1e-5)
    for k in range(1, 16):
        assert holtsmark_firstline(k) == pytest.approx(logf_coeff_quadrature(1.5, k), abs=1e-10)


def test_holtsmark_digamma_line_disagrees():
    d = holtsmark_discrepancy(1)
    assert d["digamma_flagged"]
    assert d["digamma_deviation"] == pytest.approx(0.854, abs=2e-3)
    assert abs(d["firstline_deviation"]) < 1e-10
    assert holtsmark_digamma_line(1) == pytest.approx(-0.0354, abs=1e-4)


def test_coefficient_sets_agree():
    q = szego_coefficients(1.5, 8, method="quadrature")
    c = szego_coefficients(1.5, 8, method="closed")
    s = szego_coefficients(1.5, 8, scale=1.0, method="special")
    for a, b, d in zip(q.ck, c.ck, s.ck):
        assert a == pytest.approx(b, abs=1e-10) and b == pytest.approx(d, abs=1e-10)
    assert q.c0 == pytest.approx(c.c0, abs=1e-10) and c.c0 == pytest.approx(s.c0, abs=1e-10)


def test_special_rejects_other_alpha():
    with pytest.raises(DomainError):
        szego_coefficients(1.7, 3, method="special")
    with pytest.raises(DomainError):
        szego_coefficients(1.7, 3, method="bogus")


def test_flipped_and_rescaled():
    c = szego_coefficients(1.5, 4, method="closed")
    f = c.flipped()
    assert not f.shifted and f.flipped().ck == pytest.approx(c.ck, abs=0)
    assert f.ck[0] == -c.ck[0] and f.ck[1] == c.ck[1]
    r = c.rescaled(math.e)
    assert r.c0 == pytest.approx(c.c0 + 1.0)


def test_szego_constants():
    g = szego_coefficients(2.0, 10, method="special")
    log_g, log_e = szego_constants(g, 10)
    assert log_g == 0.0
    assert log_e == pytest.approx(harmonic(10), abs=1e-15)
    assert log_e == pytest.approx(2.928968, abs=1e-6)
    h = szego_coefficients(1.5, 1, method="special")
    assert szego_constants(h, 1)[1] == pytest.approx(0.66963, abs=1e-5)
    with pytest.raises(DomainError):
        szego_constants(h, 2)


def test_szego_report_schema():
    rep = szego_report(szego_coefficients(2.0, 3, method="special"), 2)
    assert rep["schema"] == 1
    assert rep["logE_partial"] == {"m": 2, "value": pytest.approx(1.5)}


def test_asymptote_gaussian():
    rows = asymptote_study(2.0, [10, 50, 400])
    for r in rows:
        assert r.n_c0 == 0.0
        assert r.residual == pytest.approx(math.log(r.n + 1), abs=1e-12)
    last = rows[-1]
    assert last.diag == pytest.approx(math.exp(harmonic(400)) / 401, rel=1e-12)
    assert abs(last.diag - euler_factor()) / euler_factor() < 0.01
    assert euler_factor() == pytest.approx(math.exp(EULER_GAMMA))


def test_asymptote_holtsmark_residual_positive_and_shrinking():
    rows = asymptote_study(1.5, [50, 100, 200])
    per_n = [r.residual / r.n for r in rows]
    assert all(r.residual > 0 for r in rows)
    assert per_n == sorted(per_n, reverse=True)


def test_asymptote_with_given_coeffs_and_csv():
    coeffs = szego_coefficients(2.0, 20, method="special")
    rows = asymptote_study(2.0, [5, 20], m_rule=lambda n: min(n, 20), coeffs=coeffs)
    assert isinstance(rows[0], AsymptoteRow)
    buf = io.StringIO()
    rows_to_csv(rows, buf)
    assert buf.getvalue().splitlines()[0] == "n,log_det,n_c0,residual,diag"
    with pytest.raises(DomainError):
        asymptote_study(2.0, [20, 5])


def test_argument_checks():
    with pytest.raises(DomainError):
        logf_coeff_closed(1.5, 0)
    with pytest.raises(DomainError):
        logf_coeff_quadrature(1.5, -1)
    with pytest.raises(DomainError):
        logf_coeff_quadrature(1.5, 0, scale=0.0)
    assert isinstance(szego_coefficients(1.5, 0, method="closed"), SzegoCoefficients)
