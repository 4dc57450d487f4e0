"""Toeplitz assembly of the discretized fractional operator and its symbol.

Conventions
-----------
The physical matrix is ``scale * M`` with
``scale = K_alpha / (|cos(pi alpha / 2)| eps^alpha)`` and ``M`` the
dimensionless Toeplitz matrix, ``M[i, j] = m_{i-j}``. The kernel is

    m_0      = -w_1 = alpha
    m_{-1}   = -((1+beta) w_0 + (1-beta) w_2) / 2        (superdiagonal)
    m_{+1}   = -((1-beta) w_0 + (1+beta) w_2) / 2        (subdiagonal)
    m_{-k}   = -(1-beta) w_{k+1} / 2,   k >= 2
    m_{+k}   = -(1+beta) w_{k+1} / 2,   k >= 2

and the symbol ``f(theta) = sum_k m_k e^{i k theta}`` is the closed form in
:func:`symbol_closed`. For beta = 0 the kernel is symmetric and M is
centrosymmetric; beta = +-1 leaves one side with only the m_{-+1} band.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import Iterable, TextIO

import numpy as np

from .errors import DomainError
from .glweights import check_alpha, weights


@dataclass(frozen=True)
class StableParams:
    """Stable-law parameters plus the physical grid.

    ``L`` defaults to ``n + 1`` so that the grid spacing is exactly 1.
    """

    alpha: float
    beta: float = 0.0
    K_alpha: float = 1.0
    L: float | None = None
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        if not -1.0 <= self.beta <= 1.0:
            raise DomainError(f"beta must lie in [-1, 1], got {self.beta!r}")
        if not self.K_alpha > 0.0 or math.isinf(self.K_alpha):
            raise DomainError(f"K_alpha must be positive and finite, got {self.K_alpha!r}")
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if self.L is None:
            object.__setattr__(self, "L", float(self.n + 1))
        elif not self.L > 0.0 or math.isinf(self.L):
            raise DomainError(f"L must be positive and finite, got {self.L!r}")

    @property
    def epsilon(self) -> float:
        return self.L / (self.n + 1)

    @property
    def K_plus(self) -> float:
        return 0.5 * self.K_alpha * (1.0 + self.beta)

    @property
    def K_minus(self) -> float:
        return 0.5 * self.K_alpha * (1.0 - self.beta)

    @property
    def scale(self) -> float:
        c = abs(math.cos(0.5 * math.pi * self.alpha))
        value = self.K_alpha / (c * self.epsilon**self.alpha)
        if not (value > 0.0 and math.isfinite(value)):
            raise DomainError(f"scale factor is not positive and finite: {value!r}")
        return value

    def with_n(self, n: int) -> "StableParams":
        """Same physics on a new grid. A default L follows n (unit spacing)."""
        L = None if self.L == self.n + 1 else self.L
        return StableParams(self.alpha, self.beta, self.K_alpha, L, n)


def kernel_bands(alpha: float, beta: float, kmax: int) -> tuple[np.ndarray, np.ndarray]:
    """Dimensionless bands ``(m_0..m_kmax, m_0..m_{-kmax})``.

    The first array holds the subdiagonal side m_{+k}, the second the
    superdiagonal side m_{-k}; both start with m_0.
    """
    w = weights(alpha, kmax + 1).values
    lower = np.empty(kmax + 1)
    upper = np.empty(kmax + 1)
    lower[0] = upper[0] = -w[1]
    if kmax >= 1:
        lower[1] = -0.5 * ((1.0 - beta) * w[0] + (1.0 + beta) * w[2])
        upper[1] = -0.5 * ((1.0 + beta) * w[0] + (1.0 - beta) * w[2])
    if kmax >= 2:
        lower[2:] = -0.5 * (1.0 + beta) * w[3:]
        upper[2:] = -0.5 * (1.0 - beta) * w[3:]
    return lower, upper


@dataclass(frozen=True, eq=False)
class ToeplitzOperator:
    """Truncated Toeplitz operator. ``kernel[k + n - 1] = m_k``."""

    n: int
    kernel: np.ndarray
    scale: float
    params: StableParams
    _dense: list = field(default_factory=list, repr=False, compare=False)

    def m(self, k: int) -> float:
        if abs(k) > self.n - 1:
            raise IndexError(k)
        return float(self.kernel[k + self.n - 1])

    def dense(self) -> np.ndarray:
        """Dimensionless matrix M; built once, returned read-only."""
        if not self._dense:
            i = np.arange(self.n)
            mat = self.kernel[(i[:, None] - i[None, :]) + self.n - 1]
            mat.setflags(write=False)
            self._dense.append(mat)
        return self._dense[0]

    def physical(self) -> np.ndarray:
        return self.scale * self.dense()

    def trace(self) -> float:
        return self.n * self.m(0)


def assemble(params: StableParams) -> ToeplitzOperator:
    n = params.n
    lower, upper = kernel_bands(params.alpha, params.beta, n - 1)
    # + 0.0 folds the -0.0 bands left by beta = +-1
    kernel = np.concatenate([upper[:0:-1], lower]) + 0.0
    return ToeplitzOperator(n, kernel, params.scale, params)


def tridiagonal_laplacian(n: int, K2: float = 1.0, L: float | None = None) -> ToeplitzOperator:
    """Centered second-difference matrix (2 on the diagonal, -1 beside it).

    ``K2`` plays the role of hbar^2 / 2m, so ``scale = K2 / eps^2``.
    """
    params = StableParams(2.0, 0.0, K2, L, n)
    kernel = np.zeros(2 * n - 1)
    kernel[n - 1] = 2.0
    if n > 1:
        kernel[n - 2] = kernel[n] = -1.0
    return ToeplitzOperator(n, kernel, params.scale, params)


def exchange_matrix(n: int) -> np.ndarray:
    return np.eye(n)[::-1]


# ---------------------------------------------------------------------------
# symbol


@dataclass(frozen=True)
class SymbolSample:
    theta: float
    u: float
    v: float
    shifted: bool = False


def symbol_closed(
    params: StableParams, theta: float, shifted: bool = False, physical: bool = False
) -> SymbolSample:
    """Closed-form symbol on the unit circle.

    Unshifted: u = |2 sin(theta/2)|^a cos((theta-pi)(1-a/2)),
               v = -beta |2 sin(theta/2)|^a sin((theta-pi)(1-a/2)),
    matching the Fourier series of the kernel for theta in (0, 2 pi).
    Shifted (origin moved to the maximum): the same with theta -> theta + pi,
    i.e. |2 cos(theta/2)|^a and cos/sin(theta (1-a/2)), valid on (-pi, pi).
    """
    a = params.alpha
    c = 1.0 - 0.5 * a
    if shifted:
        radius = abs(2.0 * math.cos(0.5 * theta)) ** a
        phase = theta * c
    else:
        radius = abs(2.0 * math.sin(0.5 * theta)) ** a
        phase = (theta - math.pi) * c
    u = radius * math.cos(phase)
    v = -params.beta * radius * math.sin(phase)
    if physical:
        u *= params.scale
        v *= params.scale
    return SymbolSample(theta, u, v, shifted)


def symbol_series(params: StableParams, theta: float, terms: int) -> SymbolSample:
    """Truncated Fourier series of the unshifted symbol,

    u = alpha - cos(theta) - sum_{k=1}^{terms} w_{k+1} cos(k theta)
    v = beta (sin(theta) - sum_{k=1}^{terms} w_{k+1} sin(k theta)).
    """
    if terms < 1:
        raise DomainError(f"terms must be >= 1, got {terms!r}")
    w = weights(params.alpha, terms + 1).values
    k = np.arange(1, terms + 1)
    tail = w[2:]
    u = params.alpha - math.cos(theta) - float(np.dot(tail, np.cos(k * theta)))
    v = params.beta * (math.sin(theta) - float(np.dot(tail, np.sin(k * theta))))
    return SymbolSample(theta, u, v, False)


def symbol_curve(params: StableParams, points: int, physical: bool = False) -> list[SymbolSample]:
    """``points`` samples with theta = 2 pi j / (points + 1), j = 1..points."""
    if points < 2:
        raise DomainError(f"points must be >= 2, got {points!r}")
    step = 2.0 * math.pi / (points + 1)
    return [symbol_closed(params, j * step, physical=physical) for j in range(1, points + 1)]


def ellipse_residual(params: StableParams, sample: SymbolSample) -> float:
    """|u^2 + (v/beta)^2 - (2 sin(theta/2))^(2 alpha)| for a dimensionless
    unshifted sample. With beta = 0 the relation is undefined and |v| is
    returned instead.
    """
    rhs = (2.0 * math.sin(0.5 * sample.theta)) ** (2.0 * params.alpha)
    if params.beta == 0.0:
        return abs(sample.v)
    return abs(sample.u**2 + (sample.v / params.beta) ** 2 - rhs)


def g_function(alpha: float, theta):
    """g(theta) = |2 sin(theta/2)|^alpha cos((theta - pi)(1 - alpha/2)), vectorized."""
    theta = np.asarray(theta, dtype=float)
    return np.abs(2.0 * np.sin(0.5 * theta)) ** alpha * np.cos((theta - np.pi) * (1.0 - 0.5 * alpha))


def symbol_period(p: int, q: int, scan_points: int = 4001, tol: float = 1e-9) -> tuple[int, float]:
    """Minimal period 2 pi n1 of g for alpha = p/q.

    n1 is the least integer with n1 (1 - p/(2q)) integral, i.e.
    n1 = 2q / gcd(2q - p, 2q). The answer is confirmed by scanning
    g(theta + T) - g(theta) on a grid over one candidate period and checking
    every shorter multiple of 2 pi fails.
    """
    if p < 1 or q < 1 or math.gcd(p, q) != 1:
        raise DomainError(f"need coprime positive p, q; got {p}, {q}")
    if not 1.0 < p / q <= 2.0:
        raise DomainError(f"p/q must lie in (1, 2], got {p}/{q}")
    alpha = p / q
    n1 = 2 * q // math.gcd(2 * q - p, 2 * q)
    period = 2.0 * math.pi * n1
    grid = np.linspace(0.0, period, scan_points)
    base = g_function(alpha, grid)
    if np.max(np.abs(g_function(alpha, grid + period) - base)) > tol:
        raise RuntimeError(f"grid scan rejects period {period} for alpha={p}/{q}")
    for shorter in range(1, n1):
        gap = np.max(np.abs(g_function(alpha, grid + 2.0 * math.pi * shorter) - base))
        if gap <= tol:
            raise RuntimeError(f"grid scan finds shorter period 2 pi * {shorter} for alpha={p}/{q}")
    return n1, period


def wiener_besov_check(params: StableParams, N: int) -> dict:
    """Partial Wiener and Besov sums of the physical symbol coefficients
    f_k = scale * m_k over |k| <= N, with the analytic bounds

        wiener <= 3 alpha K / |cos(pi alpha/2)| eps^-alpha = 3 alpha scale
        besov  <= 4 scale^2 (alpha (3 alpha/4 - 1) + 1 + 16/(9 pi)).

    The dimensionless Wiener sum converges to exactly 2 alpha.
    """
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N!r}")
    a = params.alpha
    s = params.scale
    lower, upper = kernel_bands(a, params.beta, N)
    mags = np.concatenate([np.abs(upper[1:]), np.abs(lower)])
    ks = np.concatenate([np.arange(1, N + 1), np.arange(0, N + 1)])
    wiener = s * math.fsum(mags)
    besov = s * s * math.fsum((ks + 1) * mags**2)
    return {
        "wiener_partial": wiener,
        "wiener_bound": 3.0 * a * s,
        "besov_partial": besov,
        "besov_bound": 4.0 * s * s * (a * (0.75 * a - 1.0) + 1.0 + 16.0 / (9.0 * math.pi)),
    }


def write_symbol_csv(samples: Iterable[SymbolSample], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["theta", "u", "v"])
    for s in samples:
        writer.writerow([format(s.theta, ".17g"), format(s.u, ".17g"), format(s.v, ".17g")])
