"""Special functions and adaptive quadrature.

Everything here is written from scratch on top of ``math`` and ``numpy``:
log-Gamma and digamma via upward recurrence plus Stirling series, the
Lobachevsky function by graded quadrature, Catalan's and Euler's constants
from their defining series/limits, and a global adaptive Gauss-Legendre
integrator that grades toward integrable endpoint singularities.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError

# Stored references; revalidated against their defining series on import.
CATALAN = 0.91596559417721901505
EULER_GAMMA = 0.57721566490153286061

# B_{2k} for k = 1..8
_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)
_STIRLING_MIN = 12.0
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _stirling_tail(x: float) -> float:
    """Sum of B_{2k} / (2k (2k-1) x^{2k-1}); x >= _STIRLING_MIN."""
    inv = 1.0 / x
    inv2 = inv * inv
    acc = 0.0
    power = inv
    for k, b in enumerate(_BERNOULLI, start=1):
        acc += b / (2 * k * (2 * k - 1)) * power
        power *= inv2
    return acc


def _shift_count(x: float) -> int:
    return max(0, math.ceil(_STIRLING_MIN - x))


def log_gamma(x: float) -> float:
    """Natural logarithm of the Gamma function for ``x > 0``."""
    x = float(x)
    if not x > 0.0 or math.isinf(x):
        raise DomainError(f"log_gamma requires finite x > 0, got {x!r}")
    shift = _shift_count(x)
    # log prod_{j<shift} (x + j) accumulated as one product, no overflow for shift <= 12
    prod = 1.0
    for j in range(shift):
        prod *= x + j
    y = x + shift
    value = (y - 0.5) * math.log(y) - y + _HALF_LOG_2PI + _stirling_tail(y)
    return value - math.log(prod)


def log_gamma_ratio(a: float, b: float) -> float:
    """``log Gamma(a) - log Gamma(b)`` without forming either large logarithm.

    Both arguments are shifted by the same integer before the Stirling
    expansion, and the leading terms are combined through ``log1p`` so the
    difference stays accurate when ``a`` and ``b`` are large and close.
    """
    a = float(a)
    b = float(b)
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"log_gamma_ratio requires a, b > 0, got {a!r}, {b!r}")
    shift = _shift_count(min(a, b))
    correction = 0.0
    for j in range(shift):
        correction += math.log1p((a - b) / (b + j))
    big_a = a + shift
    big_b = b + shift
    d = big_a - big_b
    lead = (big_a - 0.5) * math.log1p(d / big_b) + d * math.log(big_b) - d
    return lead + _stirling_tail(big_a) - _stirling_tail(big_b) - correction


def digamma(x: float) -> float:
    """Psi(x) = d/dx log Gamma(x) for ``x > 0``."""
    x = float(x)
    if not x > 0.0 or math.isinf(x):
        raise DomainError(f"digamma requires finite x > 0, got {x!r}")
    acc = 0.0
    while x < _STIRLING_MIN:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for k, b in enumerate(_BERNOULLI, start=1):
        series += b / (2 * k) * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - series


# ---------------------------------------------------------------------------
# constants from their defining series


def catalan_partial(m: int) -> float:
    """Plain partial sum of sum_{j=0}^{m} (-1)^j / (2j+1)^2 (1 for m <= 0)."""
    if m <= 0:
        return 1.0
    return math.fsum((-1.0) ** j / (2 * j + 1) ** 2 for j in range(m + 1))


def catalan_series(terms: int = 30) -> float:
    """Catalan's constant by Cohen-Villegas-Zagier acceleration of the
    alternating series sum (-1)^m / (2m+1)^2. Error is about 5.8**(-terms).
    """
    d = (3.0 + math.sqrt(8.0)) ** terms
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    s = 0.0
    for k in range(terms):
        c = b - c
        s += c / (2 * k + 1) ** 2
        b = (k + terms) * (k - terms) * b / ((k + 0.5) * (k + 1.0))
    return s / d


def catalan() -> float:
    return CATALAN


def euler_gamma_limit(levels: int = 11) -> float:
    """Euler's constant from lim (H_m - log m), Richardson-extrapolated over
    m = 2^0 .. 2^(levels-1). H_m - log m has a full power series in 1/m, so
    every extrapolation column removes one power of 1/2.
    """
    row: list[float] = []
    for j in range(levels):
        m = 2**j
        h = math.fsum(1.0 / k for k in range(1, m + 1))
        new = [h - math.log(m)]
        for i, prev in enumerate(row, start=1):
            factor = 2.0**i
            new.append((factor * new[i - 1] - prev) / (factor - 1.0))
        row = new
    return row[-1]


def harmonic(m: int) -> float:
    return math.fsum(1.0 / k for k in range(1, m + 1))


def _validate_constants() -> None:
    checks = {
        "catalan": (catalan_series(), CATALAN, 1e-14),
        "euler_gamma": (euler_gamma_limit(), EULER_GAMMA, 1e-12),
    }
    for name, (computed, stored, tol) in checks.items():
        if abs(computed - stored) > tol:
            raise RuntimeError(f"stored constant {name} fails series check: {computed!r} vs {stored!r}")


# ---------------------------------------------------------------------------
# quadrature


@dataclass(frozen=True)
class QuadratureSpec:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_depth: int = 60
    singular_left: bool = False
    singular_right: bool = False
    max_intervals: int = 200_000

    def __post_init__(self):
        if not self.abs_tol > 0.0:
            raise DomainError("abs_tol must be positive")
        if self.rel_tol < 0.0:
            raise DomainError("rel_tol must be nonnegative")
        if self.max_depth < 1:
            raise DomainError("max_depth must be at least 1")


DEFAULT_QUADRATURE = QuadratureSpec()

_COARSE_X, _COARSE_W = np.polynomial.legendre.leggauss(10)
_FINE_X, _FINE_W = np.polynomial.legendre.leggauss(20)
# Intervals touching a flagged endpoint are cut this close to the singular side.
_GRADE = 0.125


def _evaluate(f: Callable, x: np.ndarray) -> np.ndarray:
    y = f(x)
    y = np.asarray(y, dtype=float)
    if y.shape != x.shape:
        y = np.array([float(f(t)) for t in x])
    return y


def _rule(f: Callable, a: float, b: float) -> tuple[float, float]:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    nodes = np.concatenate([mid + half * _COARSE_X, mid + half * _FINE_X])
    values = _evaluate(f, nodes)
    if not np.all(np.isfinite(values)):
        raise ConvergenceError(f"integrand not finite on [{a!r}, {b!r}]")
    coarse = half * float(np.dot(_COARSE_W, values[: _COARSE_X.size]))
    fine = half * float(np.dot(_FINE_W, values[_COARSE_X.size :]))
    return fine, abs(fine - coarse)


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    spec: QuadratureSpec | None = None,
) -> float:
    """Global adaptive integral of ``f`` over ``[a, b]``.

    Each panel is integrated with 10- and 20-point Gauss-Legendre rules and
    the difference serves as a (pessimistic) error estimate. The worst panel
    is split until the summed estimate drops below
    ``max(abs_tol, rel_tol * |result|)``. Panels touching an endpoint flagged
    as singular are split geometrically toward it, which resolves integrable
    logarithmic singularities in a few dozen levels.

    ``f`` should accept a numpy array; scalar-only callables are mapped
    elementwise.
    """
    spec = spec or DEFAULT_QUADRATURE
    a = float(a)
    b = float(b)
    if not a < b:
        raise DomainError(f"integrate requires a < b, got [{a!r}, {b!r}]")

    val, err = _rule(f, a, b)
    heap = [(-err, a, b, val, err, 0)]
    total_val = val
    total_err = err
    iterations = 0
    while total_err > max(spec.abs_tol, spec.rel_tol * abs(total_val)):
        iterations += 1
        if iterations % 64 == 0:
            # resync running sums against accumulated cancellation
            total_val = math.fsum(item[3] for item in heap)
            total_err = math.fsum(item[4] for item in heap)
            if total_err <= max(spec.abs_tol, spec.rel_tol * abs(total_val)):
                break
        _, lo, hi, v, e, depth = heapq.heappop(heap)
        if depth >= spec.max_depth or len(heap) >= spec.max_intervals:
            raise ConvergenceError(
                f"quadrature on [{a!r}, {b!r}] stalled at depth {depth} "
                f"with error estimate {total_err:.3e}"
            )
        if spec.singular_left and lo == a:
            cut = lo + _GRADE * (hi - lo)
        elif spec.singular_right and hi == b:
            cut = hi - _GRADE * (hi - lo)
        else:
            cut = 0.5 * (lo + hi)
        v1, e1 = _rule(f, lo, cut)
        v2, e2 = _rule(f, cut, hi)
        heapq.heappush(heap, (-e1, lo, cut, v1, e1, depth + 1))
        heapq.heappush(heap, (-e2, cut, hi, v2, e2, depth + 1))
        total_val += v1 + v2 - v
        total_err += e1 + e2 - e
    return math.fsum(item[3] for item in heap)


def lobachevsky(x: float) -> float:
    """L(x) = -int_0^x log(cos u) du on [0, pi/2)."""
    x = float(x)
    if not 0.0 <= x < 0.5 * math.pi:
        raise DomainError(f"lobachevsky is evaluated on [0, pi/2), got {x!r}")
    if x == 0.0:
        return 0.0
    spec = QuadratureSpec(abs_tol=1e-13, rel_tol=1e-13, singular_right=x > 1.0)
    return -integrate(lambda u: np.log(np.cos(u)), 0.0, x, spec)


_validate_constants()
