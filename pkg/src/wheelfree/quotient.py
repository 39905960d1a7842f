"""Equitable partitions, exact quotient matrices, characteristic polynomials.

A partition of the vertex set is equitable for a matrix when every block of
the partitioned matrix has constant row sums; the k x k matrix of those row
sums (the quotient) then shares its top eigenvalue with the host matrix
whenever the host is nonnegative and irreducible.  Quotient entries are kept
as exact rationals and characteristic polynomials are computed over the
rationals by the Faddeev-LeVerrier recurrence, so golden-value comparisons
in the tests are exact, not floating.

Eigenvalues of a (generally non-symmetric) quotient B are computed through
the similarity D^(1/2) B D^(-1/2) with D the diagonal of cell sizes, which
is symmetric for quotients of symmetric matrices; this keeps the trusted
numeric core to the symmetric Jacobi solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Graph, bits, g_abcd, mask_of
from .spectral import graph_matrix, jacobi_eigensystem, spectral_radius

MATRIX_KINDS = ("adjacency", "signless_laplacian")


class PartitionError(ValueError):
    """Invalid or non-equitable partition."""


@dataclass(frozen=True)
class Partition:
    """Ordered disjoint nonempty vertex cells, as bitmasks."""

    cells: tuple[int, ...]

    def __post_init__(self) -> None:
        seen = 0
        for cell in self.cells:
            if cell == 0:
                raise PartitionError("empty cell")
            if cell & seen:
                raise PartitionError("cells overlap")
            seen |= cell

    @property
    def k(self) -> int:
        return len(self.cells)

    def covered(self) -> int:
        m = 0
        for cell in self.cells:
            m |= cell
        return m

    def sizes(self) -> tuple[int, ...]:
        return tuple(cell.bit_count() for cell in self.cells)


def _check_cover(g: Graph, p: Partition) -> None:
    if p.covered() != (1 << g.n) - 1:
        raise PartitionError("partition does not cover the vertex set")


def _block_row_sum(g: Graph, v: int, cell_i: int, cell_j: int, kind: str) -> int:
    total = (g.adj[v] & cell_j).bit_count()
    if kind == "signless_laplacian" and cell_i == cell_j:
        total += g.adj[v].bit_count()
    return total


def is_equitable(g: Graph, p: Partition, kind: str = "adjacency") -> bool:
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}")
    _check_cover(g, p)
    for cell in p.cells:
        first = None
        for v in bits(cell):
            sig = tuple(_block_row_sum(g, v, cell, other, kind) for other in p.cells)
            if first is None:
                first = sig
            elif sig != first:
                return False
    return True


def coarsest_equitable(g: Graph, kind: str = "adjacency") -> Partition:
    """Iterated neighbor-count refinement from the single-cell partition.

    Cells are ordered by their smallest vertex index, which fixes the
    quotient layout used by all golden values in the tests.  The refinement
    is the same for both matrix kinds: constant adjacency counts per cell
    force constant degrees, which covers the diagonal of the signless
    Laplacian as well.
    """
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}")
    cells = [(1 << g.n) - 1]
    while True:
        groups: dict[tuple[int, tuple[int, ...]], int] = {}
        for idx, cell in enumerate(cells):
            for v in bits(cell):
                sig = (idx, tuple((g.adj[v] & other).bit_count() for other in cells))
                groups[sig] = groups.get(sig, 0) | 1 << v
        split = sorted(groups.values(), key=lambda m: (m & -m).bit_length())
        if len(split) == len(cells):
            return Partition(tuple(split))
        cells = split


@dataclass(frozen=True)
class QuotientMatrix:
    """Square matrix of exact block row sums."""

    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def k(self) -> int:
        return len(self.entries)

    def as_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries])


def quotient_matrix(g: Graph, p: Partition, kind: str = "adjacency") -> QuotientMatrix:
    if not is_equitable(g, p, kind):
        raise PartitionError("partition is not equitable for this matrix")
    rows = []
    for cell in p.cells:
        v = (cell & -cell).bit_length() - 1
        rows.append(tuple(Fraction(_block_row_sum(g, v, cell, other, kind))
                          for other in p.cells))
    return QuotientMatrix(tuple(rows))


# ---------------------------------------------------------------------------
# exact characteristic polynomials
# ---------------------------------------------------------------------------

def _mat_mul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    k = len(a)
    return [[sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0))
             for j in range(k)] for i in range(k)]


def char_poly_exact(entries: tuple[tuple[Fraction, ...], ...]) -> tuple[Fraction, ...]:
    """Monic characteristic polynomial det(xI - M), coefficients ascending,
    via the Faddeev-LeVerrier trace recurrence over exact rationals."""
    k = len(entries)
    b = [list(row) for row in entries]
    coeffs = [Fraction(0)] * k + [Fraction(1)]
    m = [row[:] for row in b]
    for i in range(1, k + 1):
        c = -sum((m[t][t] for t in range(k)), Fraction(0)) / i
        coeffs[k - i] = c
        if i == k:
            break
        for t in range(k):
            m[t][t] += c
        m = _mat_mul(b, m)
    return tuple(coeffs)


def char_poly(q: QuotientMatrix) -> tuple[Fraction, ...]:
    return char_poly_exact(q.entries)


def poly_eval(coeffs: tuple[Fraction, ...], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_shift(coeffs: tuple[Fraction, ...], r: Fraction) -> tuple[Fraction, ...]:
    """Coefficients of p(x + r), by repeated synthetic division by (x - r)."""
    work = list(coeffs)
    out = []
    for _ in range(len(coeffs)):
        quo = [Fraction(0)] * (len(work) - 1)
        carry = Fraction(0)
        for i in reversed(range(1, len(work))):
            carry = work[i] + carry * r
            quo[i - 1] = carry
        out.append(work[0] + carry * r)
        work = quo
    return tuple(out)


def is_largest_root(coeffs: tuple[Fraction, ...], r: Fraction) -> bool:
    """For a real-rooted monic polynomial: is r its largest root?

    True exactly when p(r) = 0 and every coefficient of p(x + r) is
    nonnegative (all roots of the shifted polynomial are <= 0).
    """
    if poly_eval(coeffs, r) != 0:
        return False
    return all(c >= 0 for c in poly_shift(coeffs, r))


# ---------------------------------------------------------------------------
# quotient eigenvalues and the shared-top-eigenvalue check
# ---------------------------------------------------------------------------

def quotient_eigenvalues(q: QuotientMatrix, sizes: tuple[int, ...]) -> np.ndarray:
    """Eigenvalues (descending) via the cell-size symmetrization."""
    if len(sizes) != q.k:
        raise ValueError("cell size count does not match quotient dimension")
    root = [math.sqrt(s) for s in sizes]
    b = q.as_float()
    sym = np.array([[b[i][j] * root[i] / root[j] for j in range(q.k)]
                    for i in range(q.k)])
    values, _ = jacobi_eigensystem(sym)
    return values


def shares_top_eigenvalue(g: Graph, p: Partition, kind: str = "adjacency",
                  tol: float = 1e-10) -> bool:
    """Top quotient eigenvalue equals the host spectral radius (connected g)."""
    if not g.is_connected():
        raise PartitionError("shared-top-eigenvalue check needs a connected graph")
    q = quotient_matrix(g, p, kind)
    top = float(quotient_eigenvalues(q, p.sizes())[0])
    rho = spectral_radius(graph_matrix(g, kind)).radius
    return abs(top - rho) <= tol


# ---------------------------------------------------------------------------
# the apex-spider quotient displays
# ---------------------------------------------------------------------------

def apex_spider_partition(a: int, b: int, z: int) -> Partition:
    """The cell structure of g_abcd(a, b, 0, z) in construction layout:
    apex, spider center, leaves, mid vertices, feet, outer vertices."""
    cells = [1, 2]
    offset = 2
    for size in (a, b, b, z):
        if size <= 0:
            raise PartitionError("every cell must be nonempty")
        cells.append(mask_of(range(offset, offset + size)))
        offset += size
    return Partition(tuple(cells))


def _poly_one_leg(n: int, d: int) -> tuple[Fraction, ...]:
    """Quotient characteristic polynomial for the b = 1 apex-spider family."""
    n, d = Fraction(n), Fraction(d)
    return (
        d * d - (n + 2) * d + 3 * n - 3,
        2 * n - 8,
        -(3 * d * d - (3 * n + 6) * d + 6 * n + 3),
        4 - 2 * n,
        d * d - (n + 2) * d + n,
        Fraction(0),
        Fraction(1),
    )


def _poly_multi_leg(n: int, d: int, b: int) -> tuple[Fraction, ...]:
    """Quotient characteristic polynomial for the general apex-spider family."""
    n, d, b = Fraction(n), Fraction(d), Fraction(b)
    return (
        d * d - (n + 2 * b) * d + (2 * b + 1) * (n - 1),
        (2 - 2 * b) * d + (2 * n - 6) * b - 2,
        -((b + 2) * d * d - (b * b + (b + 2) * n + 3 * b + 2) * d
          + (b + 1) * (b + 2) * n + 4 * b - 1),
        (2 * b - 2) * d + 2 * b + 2 - 2 * b * n,
        d * d - (n + 2) * d + n + b - 1,
        Fraction(0),
        Fraction(1),
    )


def apex_spider_char_poly_check(n: int, d_u: int, b: int) -> bool:
    """Exact check of the closed-form quotient polynomial at one parameter
    triple: build g_abcd(d_u - 2b - 1, b, 0, n - 1 - d_u), take the six-cell
    layout quotient, and compare all coefficients as rationals."""
    a = d_u - 2 * b - 1
    z = n - 1 - d_u
    if b < 1 or a < 1 or z < 1:
        raise PartitionError(
            f"parameters (n={n}, d_u={d_u}, b={b}) leave an empty cell")
    g = g_abcd(a, b, 0, z)
    p = apex_spider_partition(a, b, z)
    computed = char_poly(quotient_matrix(g, p, "adjacency"))
    expected = _poly_one_leg(n, d_u) if b == 1 else _poly_multi_leg(n, d_u, b)
    return computed == expected


def legs_only_top_below(n: int, d_u: int) -> bool:
    """The degenerate a = 0 family (all legs, no leaves) has no closed-form
    polynomial on record; check its five-cell quotient top eigenvalue
    against the (2n+1)/4 ceiling instead."""
    if d_u % 2 == 0:
        raise PartitionError("all-legs family needs odd apex degree")
    b = (d_u - 1) // 2
    z = n - 1 - d_u
    if b < 1 or z < 1:
        raise PartitionError(f"parameters (n={n}, d_u={d_u}) leave an empty cell")
    g = g_abcd(0, b, 0, z)
    cells = [1, 2,
             mask_of(range(2, 2 + b)),
             mask_of(range(2 + b, 2 + 2 * b)),
             mask_of(range(2 + 2 * b, g.n))]
    p = Partition(tuple(cells))
    q = quotient_matrix(g, p, "adjacency")
    top = float(quotient_eigenvalues(q, p.sizes())[0])
    return top < (2 * n + 1) / 4
