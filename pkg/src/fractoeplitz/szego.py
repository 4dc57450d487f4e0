"""Fourier coefficients of log f for the symmetric (beta = 0) symbol and the
Szego strong-limit constants built from them.

Two symbol origins are in play. The unshifted symbol
``f(theta) = |2 sin(theta/2)|^a cos((theta - pi)(1 - a/2))`` vanishes at
theta = 0; the shifted one ``fs(theta) = f(theta + pi)`` vanishes at
theta = +-pi. Their coefficients differ by exactly (-1)^k. Closed forms
below are stated for the shifted origin unless ``shifted=False``.

The coefficients are dimensionless apart from c0, which carries
``log(scale)`` with ``scale = K_alpha / (|cos(pi a/2)| eps^a)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import DomainError
from .glweights import check_alpha
from .spectra import lu_logdet
from .specfun import (
    EULER_GAMMA,
    QuadratureSpec,
    catalan,
    digamma,
    integrate,
    lobachevsky,
)
from .toeplitz import StableParams, assemble

QUADRATURE = QuadratureSpec(abs_tol=1e-12, rel_tol=1e-12)


def _check_scale(scale: float) -> float:
    scale = float(scale)
    if not scale > 0.0 or math.isinf(scale):
        raise DomainError(f"scale must be positive and finite, got {scale!r}")
    return scale


def logf_coeff_quadrature(
    alpha: float, k: int, scale: float = 1.0, shifted: bool = True, spec: QuadratureSpec | None = None
) -> float:
    """(1/pi) int_0^pi log f(theta) cos(k theta) dtheta by adaptive quadrature.

    The shifted integrand has its logarithmic singularity at theta = pi, the
    unshifted one at theta = 0; each is integrated in its own variable with
    grading toward that endpoint.
    """
    alpha = check_alpha(alpha)
    scale = _check_scale(scale)
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k!r}")
    c = 1.0 - 0.5 * alpha
    if shifted:

        def integrand(t):
            logf = alpha * np.log(2.0 * np.cos(0.5 * t)) + np.log(np.cos(c * t))
            return logf * np.cos(k * t)

        base = QuadratureSpec(singular_right=True)
    else:

        def integrand(t):
            logf = alpha * np.log(2.0 * np.sin(0.5 * t)) + np.log(np.cos(c * (t - np.pi)))
            return logf * np.cos(k * t)

        base = QuadratureSpec(singular_left=True)
    spec = spec or QUADRATURE
    spec = QuadratureSpec(
        spec.abs_tol, spec.rel_tol, spec.max_depth, base.singular_left, base.singular_right, spec.max_intervals
    )
    value = integrate(integrand, 0.0, math.pi, spec) / math.pi
    if k == 0:
        value += math.log(scale)
    return value


def logf_coeff0_closed(alpha: float, scale: float = 1.0) -> float:
    """log(scale) - 2/((2 - a) pi) L(pi (1 - a/2)), L the Lobachevsky function.

    At a = 2 the second term vanishes in the limit (L(x) ~ x^3/6).
    """
    alpha = check_alpha(alpha)
    scale = _check_scale(scale)
    if alpha == 2.0:
        return math.log(scale)
    c = 1.0 - 0.5 * alpha
    return math.log(scale) - 2.0 / ((2.0 - alpha) * math.pi) * lobachevsky(math.pi * c)


def logf_coeff_closed(alpha: float, k: int, shifted: bool = True, spec: QuadratureSpec | None = None) -> float:
    """(log f)_k for k >= 1 as I1 + I2 with

        I1 = (-1)^(k+1) a / (2k)
        I2 = 1/(2 k pi) int_0^{pi c} [cos((k/c - 1) u) - cos((k/c + 1) u)] / cos(u) du,

    c = 1 - a/2. The I2 integrand is smooth because pi c < pi/2.
    """
    alpha = check_alpha(alpha)
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k!r}")
    i1 = (-1.0) ** (k + 1) * alpha / (2.0 * k)
    if alpha == 2.0:
        value = i1
    else:
        c = 1.0 - 0.5 * alpha
        lo_freq = k / c - 1.0
        hi_freq = k / c + 1.0

        def integrand(u):
            return (np.cos(lo_freq * u) - np.cos(hi_freq * u)) / np.cos(u)

        i2 = integrate(integrand, 0.0, math.pi * c, spec or QUADRATURE) / (2.0 * k * math.pi)
        value = i1 + i2
    return value if shifted else (-1.0) ** k * value


def gaussian_coeffs(k: int, scale: float = 1.0, shifted: bool = False) -> float:
    """alpha = 2: c0 = log(scale), unshifted c_k = -1/k."""
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k!r}")
    if k == 0:
        return math.log(_check_scale(scale))
    value = -1.0 / k
    return (-1.0) ** k * value if shifted else value


def _alternating_sine_sum(k: int) -> float:
    """sum_{m=1}^{2k} sin(m pi/2)/m = 1 - 1/3 + 1/5 - ... (k terms)."""
    return math.fsum((-1.0) ** j / (2 * j + 1) for j in range(k))


def holtsmark_c0(K_alpha: float = 1.0) -> float:
    """alpha = 3/2, eps = 1: log K - log sqrt(2) + 2G/pi."""
    return math.log(K_alpha) - 0.5 * math.log(2.0) + 2.0 * catalan() / math.pi


def holtsmark_firstline(k: int, shifted: bool = True) -> float:
    """alpha = 3/2: (-1)^(k+1) 3/(4k) - (1/(pi k)) (pi/4 - sum_{m=1}^{2k} sin(m pi/2)/m)."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k!r}")
    value = (-1.0) ** (k + 1) * 0.75 / k - (0.25 * math.pi - _alternating_sine_sum(k)) / (math.pi * k)
    return value if shifted else (-1.0) ** k * value


def holtsmark_digamma_line(k: int) -> float:
    """(-1)^k (-3/(4k) + (Psi((2k+1)/4) - Psi((2k-1)/4)) / (4k)).

    Kept only for comparison: it does not agree with quadrature (about 0.85
    off at k = 1), so nothing downstream consumes it.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k!r}")
    psi = digamma((2 * k + 1) / 4.0) - digamma((2 * k - 1) / 4.0)
    return (-1.0) ** k * (-0.75 / k + psi / (4.0 * k))


def holtsmark_discrepancy(k: int) -> dict:
    """Compare both Holtsmark expressions against the quadrature oracle."""
    oracle = logf_coeff_quadrature(1.5, k)
    first = holtsmark_firstline(k)
    dig = holtsmark_digamma_line(k)
    return {
        "k": k,
        "quadrature": oracle,
        "firstline": first,
        "digamma_line": dig,
        "firstline_deviation": first - oracle,
        "digamma_deviation": oracle - dig,
        "digamma_flagged": abs(oracle - dig) > 1e-8,
    }


# ---------------------------------------------------------------------------


@dataclass
class SzegoCoefficients:
    alpha: float
    scale: float
    c0: float
    ck: list[float] = field(default_factory=list)
    method: str = "quadrature"
    shifted: bool = True

    @property
    def kmax(self) -> int:
        return len(self.ck)

    def flipped(self) -> "SzegoCoefficients":
        """Same coefficients referred to the other symbol origin."""
        ck = [(-1.0) ** k * c for k, c in enumerate(self.ck, start=1)]
        return SzegoCoefficients(self.alpha, self.scale, self.c0, ck, self.method, not self.shifted)

    def rescaled(self, scale: float) -> "SzegoCoefficients":
        scale = _check_scale(scale)
        c0 = self.c0 - math.log(self.scale) + math.log(scale)
        return SzegoCoefficients(self.alpha, scale, c0, list(self.ck), self.method, self.shifted)


METHODS = ("quadrature", "closed", "special")


def szego_coefficients(
    alpha: float,
    kmax: int,
    scale: float = 1.0,
    method: str = "quadrature",
    shifted: bool = True,
    spec: QuadratureSpec | None = None,
) -> SzegoCoefficients:
    """c0 and c_1..c_kmax by the chosen route.

    ``special`` is available for alpha = 2 (Gaussian) and alpha = 3/2
    (Holtsmark, finite-sum form). For alpha = 3/2 the special c0 uses
    ``holtsmark_c0`` with K chosen so that the physical scale matches.
    """
    alpha = check_alpha(alpha)
    scale = _check_scale(scale)
    if kmax < 0:
        raise DomainError(f"kmax must be nonnegative, got {kmax!r}")
    ks = range(1, kmax + 1)
    if method == "quadrature":
        c0 = logf_coeff_quadrature(alpha, 0, scale, spec=spec)
        ck = [logf_coeff_quadrature(alpha, k, shifted=shifted, spec=spec) for k in ks]
    elif method == "closed":
        c0 = logf_coeff0_closed(alpha, scale)
        ck = [logf_coeff_closed(alpha, k, shifted, spec) for k in ks]
    elif method == "special":
        if alpha == 2.0:
            c0 = gaussian_coeffs(0, scale)
            ck = [gaussian_coeffs(k, shifted=shifted) for k in ks]
        elif alpha == 1.5:
            # scale = K sqrt(2) at eps = 1
            c0 = holtsmark_c0(scale / math.sqrt(2.0))
            ck = [holtsmark_firstline(k, shifted) for k in ks]
        else:
            raise DomainError(f"no special-case coefficients for alpha={alpha!r}")
    else:
        raise DomainError(f"unknown method {method!r}; expected one of {METHODS}")
    return SzegoCoefficients(alpha, scale, c0, ck, method, shifted)


def szego_constants(coeffs: SzegoCoefficients, m: int) -> tuple[float, float]:
    """(log G, log E_partial) with log G = c0 and log E_partial = sum_{k<=m} k c_k^2.

    The full E sum diverges (c_k ~ +-a/(2k)) because the symbol vanishes on
    the circle, so only a partial sum with explicit cutoff is offered.
    """
    if m < 0:
        raise DomainError(f"m must be nonnegative, got {m!r}")
    if m > coeffs.kmax:
        raise DomainError(f"need kmax >= m, have {coeffs.kmax} < {m}")
    log_e = math.fsum(k * c * c for k, c in enumerate(coeffs.ck[:m], start=1))
    return coeffs.c0, log_e


def szego_report(coeffs: SzegoCoefficients, m: int) -> dict:
    log_g, log_e = szego_constants(coeffs, m)
    return {
        "schema": 1,
        "alpha": coeffs.alpha,
        "scale": coeffs.scale,
        "method": coeffs.method,
        "shifted": coeffs.shifted,
        "c0": coeffs.c0,
        "ck": list(coeffs.ck),
        "logG": log_g,
        "logE_partial": {"m": m, "value": log_e},
    }


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AsymptoteRow:
    n: int
    log_det: float
    n_c0: float
    residual: float
    diag: float


def asymptote_study(
    alpha: float,
    n_list: Sequence[int],
    m_rule: Callable[[int], int] | None = None,
    coeffs: SzegoCoefficients | None = None,
    spec: QuadratureSpec | None = None,
) -> list[AsymptoteRow]:
    """log det M_n against n c0 for the dimensionless beta = 0 truncations.

    ``residual = log det M_n - n c0``. ``diag`` compares the residual with
    the truncated strong-limit constant: exp(log E_partial(m) - residual),
    m = m_rule(n) (default m = n). For alpha = 2 this is exp(H_n)/(n + 1),
    which tends to e^C.
    """
    alpha = check_alpha(alpha)
    n_list = list(n_list)
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise DomainError("n_list must be strictly ascending")
    m_rule = m_rule or (lambda n: n)
    mmax = max((m_rule(n) for n in n_list), default=0)
    if coeffs is None:
        method = "special" if alpha == 2.0 else "closed"
        coeffs = szego_coefficients(alpha, mmax, 1.0, method, spec=spec)
    rows = []
    for n in n_list:
        sign, log_det = lu_logdet(assemble(StableParams(alpha, 0.0, n=n)).dense())
        if sign != 1:
            raise DomainError(f"determinant of M_{n} is not positive (sign {sign})")
        n_c0 = n * coeffs.c0
        residual = log_det - n_c0
        _, log_e = szego_constants(coeffs, m_rule(n))
        rows.append(AsymptoteRow(n, log_det, n_c0, residual, math.exp(log_e - residual)))
    return rows


def euler_factor() -> float:
    """e^C, the limit of exp(H_n)/(n + 1)."""
    return math.exp(EULER_GAMMA)


def rows_to_csv(rows: Iterable[AsymptoteRow], fh) -> None:
    fh.write("n,log_det,n_c0,residual,diag\n")
    for r in rows:
        fh.write(
            f"{r.n},{format(r.log_det, '.17g')},{format(r.n_c0, '.17g')},"
            f"{format(r.residual, '.17g')},{format(r.diag, '.17g')}\n"
        )
