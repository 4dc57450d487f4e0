"""Dense spectral kernels and structural checks on the Toeplitz truncations.

The eigensolver is the classical row-cyclic Jacobi method, compiled with
numba; sweep order is fixed so results are deterministic. Determinants go
through a partially pivoted LU and are only ever reported as
(sign, log|det|).
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np
from numba import njit

from .errors import ConvergenceError, DomainError
from .toeplitz import StableParams, assemble


@njit(cache=True)
def _cyclic_jacobi(a, v, target, negligible, max_sweeps):
    """Row-cyclic Jacobi sweeps in place; returns sweeps used or -1."""
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j] * a[i, j]
        if math.sqrt(off) <= target:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= negligible:
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(tau) + math.hypot(1.0, tau))
                if tau < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
    return -1


def jacobi_eigen(matrix, tol: float = 1e-14, max_sweeps: int = 60):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi.

    Returns ``(eigenvalues ascending, eigenvectors as columns)``. Sweeps stop
    once the off-diagonal Frobenius norm is at most ``tol * ||A||_F``.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    n = a.shape[0]
    norm = float(np.linalg.norm(a))
    if np.max(np.abs(a - a.T), initial=0.0) > 1e-12 * max(1.0, norm):
        raise DomainError("jacobi_eigen requires a symmetric matrix")
    a = np.ascontiguousarray(0.5 * (a + a.T))
    v = np.eye(n)
    # entries below 1e-18 ||A|| are roundoff; dropped instead of rotated
    sweeps = _cyclic_jacobi(a, v, tol * norm, 1e-18 * norm, max_sweeps)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return values[order], v[:, order]


def lu_logdet(matrix) -> tuple[int, float]:
    """Sign and log|det| from LU with partial pivoting.

    Sign 0 (and log|det| = -inf) marks a pivot below 1e-300.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    sign = 1
    logs = []
    for k in range(n):
        piv = k + int(np.argmax(np.abs(a[k:, k])))
        pivot = a[piv, k]
        if abs(pivot) < 1e-300:
            return 0, -math.inf
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
            sign = -sign
        if pivot < 0.0:
            sign = -sign
        logs.append(math.log(abs(pivot)))
        if k + 1 < n:
            col = a[k + 1 :, k] / pivot
            a[k + 1 :, k + 1 :] -= np.outer(col, a[k, k + 1 :])
    return sign, math.fsum(logs)


def tridiagonal_exact(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form eigenpairs of the n x n second-difference matrix.

    Eigenvalues 2 - 2 cos(k pi/(n+1)) = 4 sin^2(k pi/(2(n+1))), k = 1..n
    (ascending); eigenvector k has components sin(k (m+1) pi/(n+1)),
    normalized to unit length.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n!r}")
    k = np.arange(1, n + 1)
    values = 4.0 * np.sin(k * np.pi / (2.0 * (n + 1))) ** 2
    m = np.arange(n)
    vectors = np.sin(np.outer(m + 1, k) * np.pi / (n + 1)) * math.sqrt(2.0 / (n + 1))
    return values, vectors


def tridiagonal_det_recursion(n: int) -> list[float]:
    """det B_1..det B_n via det B_k = 2 det B_{k-1} - det B_{k-2}."""
    dets = []
    prev2, prev1 = 0.0, 1.0  # det B_{-1}, det B_0
    for _ in range(n):
        cur = 2.0 * prev1 - prev2
        dets.append(cur)
        prev2, prev1 = prev1, cur
    return dets


def parity_labels(vectors: np.ndarray) -> tuple[list[str], float]:
    """Classify each eigenvector column as even (Jx = x) or odd (Jx = -x).

    Returns the labels and the largest residual ||Jx -+ x|| of the chosen class.
    """
    flipped = vectors[::-1, :]
    even = np.linalg.norm(flipped - vectors, axis=0)
    odd = np.linalg.norm(flipped + vectors, axis=0)
    labels = ["even" if e <= o else "odd" for e, o in zip(even, odd)]
    return labels, float(np.max(np.minimum(even, odd), initial=0.0))


def is_alternating(labels: list[str]) -> bool:
    """Even and odd labels alternate along the ascending spectrum."""
    return bool(labels) and all(a != b for a, b in zip(labels, labels[1:]))


def is_interlaced(labels: list[str]) -> bool:
    """Alternating labels with an even largest eigenvalue.

    On M_n itself the symbol increases on (0, pi), so the eigenvalue that is
    always even is the smallest; the largest is even only for odd n. The
    largest-even pattern holds for D M_n D, D = diag((-1)^i), whose labels
    are those of M_n times (-1)^(n-1).
    """
    return is_alternating(labels) and labels[-1] == "even"


def flip_parity(labels: list[str], n: int) -> list[str]:
    """Parity labels of D M D given those of M (D = diag((-1)^i))."""
    if n % 2 == 1:
        return list(labels)
    return ["odd" if lab == "even" else "even" for lab in labels]


@dataclass
class SpectralReport:
    n: int
    alpha: float
    beta: float
    scale: float
    mean: float
    log_det: float
    det_sign: int
    eigenvalues: list[float] | None = None
    min_gap: float | None = None
    parity_labels: list[str] | None = None
    parity_residual: float | None = None
    alternating: bool | None = None
    interlaced: bool | None = None
    in_range: bool | None = None
    degenerate: bool | None = None

    @property
    def log_det_physical(self) -> float:
        return self.log_det + self.n * math.log(self.scale)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["log_det_physical"] = self.log_det_physical
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), allow_nan=False, **kwargs)


def spectral_report(params: StableParams, tol: float = 1e-14) -> SpectralReport:
    """Spectrum of the dimensionless truncation with structure checks.

    For beta != 0 only the trace mean and determinant are filled in; the
    eigen-decomposition is restricted to the symmetric case.
    """
    op = assemble(params)
    mat = op.dense()
    sign, log_det = lu_logdet(mat)
    report = SpectralReport(
        n=op.n,
        alpha=params.alpha,
        beta=params.beta,
        scale=op.scale,
        mean=op.trace() / op.n,
        log_det=log_det,
        det_sign=sign,
    )
    if params.beta != 0.0:
        return report

    values, vectors = jacobi_eigen(mat, tol)
    labels, residual = parity_labels(vectors)
    gap = float(np.min(np.diff(values))) if op.n > 1 else None
    spectral_norm = float(np.max(np.abs(values)))
    report.eigenvalues = values.tolist()
    report.mean = math.fsum(values) / op.n
    report.min_gap = gap
    report.parity_labels = labels
    report.parity_residual = residual
    report.alternating = is_alternating(labels)
    report.interlaced = is_interlaced(labels)
    report.in_range = bool(np.all(values > 0.0) and np.all(values < 2.0**params.alpha))
    # exact-arithmetic simplicity can still collapse below roundoff
    report.degenerate = gap is not None and gap < 1e-12 * spectral_norm
    return report


def weight_reconstruct(report: SpectralReport, q: int) -> float:
    """w_q from the eigenvalue mean: w_q = -(1-alpha)_{q-1} / q! * mean,
    with (x)_j the rising factorial. Uses mean = -w_1."""
    if q < 1:
        raise DomainError(f"q must be >= 1, got {q!r}")
    if report.eigenvalues is None:
        raise DomainError("weight_reconstruct needs a report with eigenvalues (beta = 0)")
    alpha = report.alpha
    factor = 1.0
    for j in range(q - 1):
        factor *= (1.0 - alpha + j) / (j + 2.0)
    return -factor * report.mean
