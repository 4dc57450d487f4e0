"""Grunwald-Letnikov weights w_n(alpha) = (-1)^n binom(alpha, n) and the
series identities they satisfy."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .specfun import log_gamma, log_gamma_ratio


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 1.0 < alpha <= 2.0:
        raise DomainError(f"alpha must lie in (1, 2], got {alpha!r}")
    return alpha


@dataclass(frozen=True)
class WeightSequence:
    alpha: float
    values: np.ndarray

    def __len__(self):
        return self.values.size

    def __getitem__(self, n):
        return self.values[n]


def weights(alpha: float, count: int) -> WeightSequence:
    """w_0 .. w_count from the recursion w_n = (1 - (alpha+1)/n) w_{n-1}."""
    alpha = check_alpha(alpha)
    if count < 0:
        raise DomainError(f"count must be nonnegative, got {count!r}")
    n = np.arange(1, count + 1, dtype=float)
    # 1 - (alpha+1)/n written as (n-1-alpha)/n: no cancellation as alpha -> 1
    factors = (n - 1.0 - alpha) / n
    values = np.empty(count + 1)
    values[0] = 1.0
    values[1:] = np.cumprod(factors)
    return WeightSequence(alpha, values)


def weight_binomial(alpha: float, n: int) -> float:
    """(-1)^n binom(alpha, n) through log-Gamma differences.

    Independent of :func:`weights`; used as its oracle. For n >= 2 the form
    alpha (alpha-1) Gamma(n-alpha) / (Gamma(2-alpha) Gamma(n+1)) is used with
    the sign carried separately.
    """
    alpha = check_alpha(alpha)
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n!r}")
    if n == 0:
        return 1.0
    if n == 1:
        return -alpha
    if alpha == round(alpha):
        return (-1.0) ** n * math.comb(int(alpha), n)
    prefactor = alpha * (alpha - 1.0)
    sign = math.copysign(1.0, prefactor)
    log_mag = (
        math.log(abs(prefactor))
        + log_gamma_ratio(n - alpha, n + 1.0)
        - log_gamma(2.0 - alpha)
    )
    return sign * math.exp(log_mag)


def weight_partial_sum(alpha: float, N: int) -> float:
    """S_N = sum_{n=0}^{N} w_n with compensated summation."""
    return math.fsum(weights(alpha, N).values)


def partial_sum_closed(alpha: float, N: int) -> float:
    """(-1)^N binom(alpha-1, N), the closed value of the partial sum S_N."""
    alpha = check_alpha(alpha)
    value = 1.0
    for j in range(1, N + 1):
        value *= 1.0 - alpha / j
    return value


def dalembert_ratio(alpha: float, n: int) -> float:
    """a_{n+1}/a_n for a_n = n (Gamma(n+1-alpha)/Gamma(n+2))^2.

    Exactly ((n+1)/n) ((n+1-alpha)/(n+2))^2.
    """
    alpha = check_alpha(alpha)
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n!r}")
    return (n + 1.0) / n * ((n + 1.0 - alpha) / (n + 2.0)) ** 2


def dalembert_ratio_printed(alpha: float, n: int) -> float:
    """((n+1)/n) (n+1-alpha)/(n+2)^2, the commonly quoted form of the ratio
    with the numerator factor left unsquared. Also < 1 for n >= 2, but it
    never exceeds :func:`dalembert_ratio` there: n + 1 - alpha >= 1, so
    dropping the square can only shrink the factor (equal at alpha = n = 2).
    """
    alpha = check_alpha(alpha)
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n!r}")
    return (n + 1.0) / n * (n + 1.0 - alpha) / (n + 2.0) ** 2


def gamma_square_term(alpha: float, n: int) -> float:
    """(Gamma(n+1-alpha)/Gamma(n+2))^2."""
    return math.exp(2.0 * log_gamma_ratio(n + 1.0 - alpha, n + 2.0))


def gamma_square_series(alpha: float, tol: float = 1e-10, max_terms: int = 10**7):
    """Partial sums of sum_{n>=2} (Gamma(n+1-alpha)/Gamma(n+2))^2 until the
    remaining tail is bounded by ``tol``.

    Terms decay like n^(-2 alpha - 2); the tail beyond N is bounded by
    term_N * N / (2 alpha + 1) once the ratio test settles. Returns
    ``(value, N, partial_sums)``.
    """
    alpha = check_alpha(alpha)
    partials = []
    acc = 0.0
    term = gamma_square_term(alpha, 2)
    n = 2
    while True:
        acc += term
        partials.append(acc)
        tail_bound = term * n / (2.0 * alpha + 1.0)
        if tail_bound < tol:
            return acc, n, np.array(partials)
        if n >= max_terms:
            raise DomainError("series did not reach tolerance within max_terms")
        term *= ((n + 1.0 - alpha) / (n + 2.0)) ** 2
        n += 1
