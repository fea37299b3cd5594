"""Dense symmetric eigen-solvers used on weighted adjacency matrices.

Two independent routes to the spectral radius are provided so that each can
check the other: cyclic Jacobi rotations (full spectrum and eigenvectors) and
shifted power iteration (largest eigenvalue only).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

JACOBI_REL_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100
POWER_TOL = 1e-12
POWER_MAX_ITER = 1_000_000


class NonConvergenceError(RuntimeError):
    pass


class ReducibleMatrixError(ValueError):
    """Matrix pattern is disconnected, so the Perron root is not simple."""


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray  # descending
    perron: np.ndarray | None = None

    @property
    def radius(self) -> float:
        return float(self.eigenvalues[0])


def as_symmetric(M) -> np.ndarray:
    A = np.array(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    if not np.array_equal(A, A.T):
        raise ValueError("matrix is not symmetric")
    return A


def is_irreducible(A: np.ndarray) -> bool:
    """True when the nonzero pattern of ``A`` is a connected graph."""
    n = A.shape[0]
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in np.flatnonzero(A[u]):
            w = int(w)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


def jacobi_eigh(M, rel_tol: float = JACOBI_REL_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Cyclic Jacobi. Returns ``(eigenvalues, eigenvectors)`` unsorted, vectors in columns."""
    A = as_symmetric(M).copy()
    n = A.shape[0]
    V = np.eye(n)
    thresh = rel_tol * np.linalg.norm(A)
    if n == 1 or thresh == 0.0:
        return np.diag(A).copy(), V
    iu = np.triu_indices(n, 1)
    # entries this small cannot keep the off-diagonal norm above thresh
    skip = thresh / n
    for _ in range(max_sweeps):
        if math.sqrt(2.0) * np.linalg.norm(A[iu]) <= thresh:
            return np.diag(A).copy(), V
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= skip:
                    continue
                h = A[q, q] - A[p, p]
                if abs(h) + 100.0 * abs(apq) == abs(h):
                    t = apq / h
                else:
                    theta = h / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                app, aqq = A[p, p], A[q, q]
                ap, aq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * ap - s * aq
                A[:, q] = s * ap + c * aq
                # symmetric: rows follow columns, then the 2x2 block in closed form
                A[p, :] = A[:, p]
                A[q, :] = A[:, q]
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = A[q, p] = 0.0
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    raise NonConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (n={n})")


def full_spectrum(M) -> Spectrum:
    """All eigenvalues (descending) and, for nonnegative irreducible input, the Perron vector."""
    A = as_symmetric(M)
    w, V = jacobi_eigh(A)
    order = np.argsort(-w, kind="stable")
    w = w[order]
    perron = None
    if np.all(A >= 0) and is_irreducible(A):
        x = V[:, order[0]]
        x = x / np.linalg.norm(x)
        if x[np.argmax(np.abs(x))] < 0:
            x = -x
        perron = x
    return Spectrum(w, perron)


def spectral_radius(M, tol: float = POWER_TOL, max_iter: int = POWER_MAX_ITER) -> float:
    """Largest eigenvalue of a nonnegative irreducible symmetric matrix by power iteration.

    Iterates on ``M + c I`` with ``c`` half the largest row sum, which separates
    the Perron root from ``-rho`` on bipartite patterns.  Stops when the
    Rayleigh quotient moves by less than ``tol``.
    """
    A = as_symmetric(M)
    if np.any(A < 0):
        raise ValueError("power iteration here assumes a nonnegative matrix")
    if not is_irreducible(A):
        raise ReducibleMatrixError("matrix is reducible (disconnected graph)")
    n = A.shape[0]
    shift = 0.5 * float(A.sum(axis=1).max())
    B = A + shift * np.eye(n)
    x = np.full(n, 1.0 / math.sqrt(n))
    lam = float(x @ B @ x)
    for _ in range(max_iter):
        y = B @ x
        x = y / np.linalg.norm(y)
        new = float(x @ B @ x)
        if abs(new - lam) < tol:
            return new - shift
        lam = new
    raise NonConvergenceError(f"power iteration exceeded {max_iter} iterations")


def char_poly(M) -> np.ndarray:
    """Monic coefficients of ``det(x I - M)``, highest degree first (Faddeev-LeVerrier)."""
    A = as_symmetric(M)
    n = A.shape[0]
    if n > 64:
        raise ValueError(f"char_poly is limited to n <= 64, got {n}")
    coeffs = np.zeros(n + 1)
    coeffs[0] = 1.0
    Mk = np.zeros_like(A)
    eye = np.eye(n)
    for k in range(1, n + 1):
        Mk = A @ Mk + coeffs[k - 1] * eye
        coeffs[k] = -np.trace(A @ Mk) / k
    return coeffs


def poly_residual(coeffs: np.ndarray, x: float) -> float:
    """``|p(x)|`` scaled by ``1 + |x|^deg``."""
    deg = len(coeffs) - 1
    return abs(float(np.polyval(coeffs, x))) / (1.0 + abs(x) ** deg)
