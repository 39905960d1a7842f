"""Dense symmetric eigensolving and the closed-form extremal radii.

Two solvers are provided and cross-checked in the tests: cyclic Jacobi
rotations to full diagonalization (the reference path, unconditionally
stable for the <= 64 dimensions used here), and a shifted power iteration
with Rayleigh-quotient stopping (the fast path used inside the extremal
search, valid for entrywise-nonnegative matrices).  Results are
deterministic: no randomness, fixed starting vectors, fixed sweep order.

Closed forms implemented:

    largest adjacency eigenvalue of the matching-join family h_n:
        (n+1)/2                for odd n
        (sqrt(n^2+1)+1)/2      for n = 0 mod 4
        largest root of x^3 - x^2 - (n^2/4) x + n/2   for n = 2 mod 4,
        found by bracketed bisection plus Newton polish

    largest signless-Laplacian eigenvalue of K2 joined to (n-2) K1:
        (n + 2 + sqrt((n+2)^2 - 16)) / 2
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, bits

DEFAULT_TOL = 1e-12
POWER_ITERATION_CAP = 100_000


class ConvergenceError(RuntimeError):
    """Eigensolver failed to reach the requested residual."""


@dataclass
class SpectralResult:
    radius: float
    perron: np.ndarray  # unit 2-norm, nonnegative for nonnegative input
    residual: float     # max-norm of M @ perron - radius * perron
    method: str         # "jacobi" or "power"
    iterations: int


# ---------------------------------------------------------------------------
# graph matrices
# ---------------------------------------------------------------------------

def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for v in range(g.n):
        for u in bits(g.adj[v]):
            a[v, u] = 1.0
    return a


def signless_laplacian(g: Graph) -> np.ndarray:
    q = adjacency_matrix(g)
    q[np.diag_indices(g.n)] = [g.degree(v) for v in range(g.n)]
    return q


def graph_matrix(g: Graph, kind: str) -> np.ndarray:
    if kind == "adjacency":
        return adjacency_matrix(g)
    if kind == "signless_laplacian":
        return signless_laplacian(g)
    raise ValueError(f"unknown matrix kind {kind!r}")


def row_sum_bounds(m: np.ndarray) -> tuple[float, float]:
    """(smallest, largest) row sum; brackets the top eigenvalue whenever a
    nonnegative eigenvector exists for it."""
    m = _checked_symmetric(m)
    sums = m.sum(axis=1)
    return float(sums.min()), float(sums.max())


def walk_count_r(g: Graph, v: int) -> int:
    """Number of walks of length two starting at v, computed structurally as
    deg(v) + 2 e(G[N(v)]) + e(N(v), N2(v))."""
    nb = g.neighborhood(v)
    within = sum((g.adj[u] & nb).bit_count() for u in bits(nb)) // 2
    second = g.second_neighborhood(v)
    out = sum((g.adj[u] & second).bit_count() for u in bits(nb))
    return nb.bit_count() + 2 * within + out


# ---------------------------------------------------------------------------
# eigensolvers
# ---------------------------------------------------------------------------

def _checked_symmetric(m: np.ndarray) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    scale = max(1.0, float(np.abs(a).max()))
    if float(np.abs(a - a.T).max()) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric")
    return (a + a.T) / 2.0


def jacobi_eigensystem(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Full diagonalization by cyclic Jacobi rotations.

    Returns (eigenvalues descending, eigenvector columns in the same order).
    Sweeps are capped at 10 * dim**2; quadratic convergence makes fewer than
    a dozen sweeps typical.
    """
    a = _checked_symmetric(m).copy()
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), v
    scale = max(1.0, float(np.abs(a).max()))
    stop = 1e-14 * scale
    for _ in range(10 * n * n):
        off = float(np.abs(a - np.diag(a.diagonal())).max())
        if off <= stop:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                app, aqq = a[p, p], a[q, q]
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    else:
        raise ConvergenceError("Jacobi sweeps exhausted without convergence")
    order = np.argsort(-a.diagonal(), kind="stable")
    return a.diagonal()[order].copy(), v[:, order]


def _power_top(a: np.ndarray, tol: float) -> tuple[float, np.ndarray, float, int]:
    """Shifted power iteration from the all-ones vector; requires a >= 0."""
    n = a.shape[0]
    shift = float(a.sum(axis=1).max()) + 1.0
    x = np.full(n, 1.0 / math.sqrt(n))
    for it in range(1, POWER_ITERATION_CAP + 1):
        ax = a @ x
        lam = float(x @ ax)
        r = ax - lam * x
        rnorm = float(np.linalg.norm(r))
        if rnorm <= tol:
            return lam, x, float(np.abs(r).max()), it
        y = ax + shift * x
        x = y / float(np.linalg.norm(y))
    raise ConvergenceError(
        f"power iteration did not reach residual {tol} in {POWER_ITERATION_CAP} steps"
    )


def _perron_polish(a: np.ndarray, radius: float, tol: float) -> tuple[np.ndarray, float, int]:
    """Nonnegative unit eigenvector for a known top eigenvalue of a >= 0.

    Iterating the shifted matrix on the all-ones vector keeps every entry
    nonnegative exactly and converges onto the top eigenspace.
    """
    n = a.shape[0]
    shift = float(a.sum(axis=1).max()) + 1.0
    x = np.full(n, 1.0 / math.sqrt(n))
    residual = math.inf
    for it in range(1, POWER_ITERATION_CAP + 1):
        r = a @ x - radius * x
        residual = float(np.abs(r).max())
        if residual <= tol:
            return x, residual, it
        y = a @ x + shift * x
        x = y / float(np.linalg.norm(y))
    raise ConvergenceError(
        f"Perron refinement stalled at residual {residual:.3e} (target {tol})"
    )


def _oriented(vec: np.ndarray) -> np.ndarray:
    for entry in vec:
        if entry != 0.0:
            return vec if entry > 0 else -vec
    return vec


def spectral_radius(m: np.ndarray, tol: float = DEFAULT_TOL,
                    method: str = "jacobi") -> SpectralResult:
    """Largest eigenvalue with an eigenvector, residual-certified.

    method "jacobi": full diagonalization, then for nonnegative input the
    eigenvector is refined to a nonnegative Perron vector.  method "power":
    the fast path, accepted only for entrywise-nonnegative matrices.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    a = _checked_symmetric(m)
    nonneg = bool(a.min() >= 0.0)
    if method == "power":
        if not nonneg:
            raise ValueError("power method requires a nonnegative matrix")
        lam, x, residual, its = _power_top(a, tol)
        return SpectralResult(lam, _oriented(x), residual, "power", its)
    if method != "jacobi":
        raise ValueError(f"unknown method {method!r}")
    values, vectors = jacobi_eigensystem(a)
    radius = float(values[0])
    if nonneg:
        x, residual, its = _perron_polish(a, radius, tol)
    else:
        x = vectors[:, 0]
        x = x / float(np.linalg.norm(x))
        residual = float(np.abs(a @ x - radius * x).max())
        its = 0
        if residual > tol:
            raise ConvergenceError(f"eigenvector residual {residual:.3e} above {tol}")
    return SpectralResult(radius, _oriented(x), residual, "jacobi", its)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def _hn_cubic_root(n: int) -> float:
    """Largest root of x^3 - x^2 - (n^2/4) x + n/2 for n = 2 mod 4.

    The root is bracketed by (sqrt(n^2-3)+1)/2 (where the cubic is negative)
    and n/2 + 1 (where it is positive); 200 bisection steps collapse the
    bracket to machine precision and Newton polishes the midpoint.
    """
    c1, c0 = -(n * n) / 4.0, n / 2.0

    def f(x: float) -> float:
        return ((x - 1.0) * x + c1) * x + c0

    lo = (math.sqrt(n * n - 3) + 1.0) / 2.0
    hi = n / 2.0 + 1.0
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if mid in (lo, hi):
            break
        if f(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    x = (lo + hi) / 2.0
    for _ in range(5):
        dfx = (3.0 * x - 2.0) * x + c1
        if dfx == 0.0:
            break
        x -= f(x) / dfx
    return x


def closed_form_rho_a_hn(n: int) -> float:
    """Largest adjacency eigenvalue of h_n(n), by case on n mod 4."""
    if n < 4:
        raise ValueError(f"family defined for order >= 4, got {n}")
    if n % 2 == 1:
        return (n + 1) / 2.0
    if n % 4 == 0:
        return (math.sqrt(n * n + 1) + 1.0) / 2.0
    return _hn_cubic_root(n)


def closed_form_rho_q(n: int) -> float:
    """Largest signless-Laplacian eigenvalue of K2 joined to (n-2) K1."""
    if n < 3:
        raise ValueError(f"closed form needs order >= 3, got {n}")
    return (n + 2 + math.sqrt((n + 2) ** 2 - 16)) / 2.0
