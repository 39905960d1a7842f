"""Isomorph-free graph generation by vertex augmentation with canonical dedup.

Each representative of order n-1 is extended by a new vertex attached to
every possible neighborhood subset; children failing the (hereditary)
predicate are dropped, and one representative per isomorphism class is kept
by canonical form.  Soundness of the pruning rests on the predicate being
closed under vertex deletion: wheel-freeness is hereditary outright, and a
connected wheel-free graph always has a non-cut vertex whose removal stays
in the class, so "connected_wheel_free" parents suffice as well.

The canonical form is the lexicographically smallest upper-triangle bit
string of the adjacency matrix over all vertex orderings, column-major (the
same bit order as graph6, so the form is literally the smallest graph6
encoding).  The ordering search is branch-and-bound: at each position only
the candidates whose adjacency pattern to the already-placed prefix is
minimal can extend a minimal string, and twin vertices (interchangeable by
a transposition automorphism) are explored only once.  Worst-case cost is
factorial but the two prunings keep it far below that for every order this
module accepts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator

import numpy as np

from . import _fastcore
from .graphs import Graph, from_graph6, permute, to_graph6
from .wheels import forest_on_rows

SOFT_ORDER_CAP = 10
HARD_ORDER_CAP = 12
PREDICATES = ("all", "wheel_free", "connected_wheel_free")

_INF_CHUNK = 1 << 63


class BudgetExhausted(RuntimeError):
    """Generation stopped early; results so far are incomplete."""

    def __init__(self, message: str, emitted: int = 0):
        super().__init__(message)
        self.emitted = emitted


@dataclass
class GeneratorConfig:
    n: int
    predicate: str = "all"
    max_seconds: float | None = None
    max_graphs: int | None = None
    allow_large: bool = False
    progress: Callable[[int, int], None] | None = None

    def validate(self) -> None:
        if self.predicate not in PREDICATES:
            raise ValueError(f"unknown predicate {self.predicate!r}")
        if self.n < 1:
            raise ValueError("order must be at least 1")
        if self.n > HARD_ORDER_CAP:
            raise ValueError(f"order {self.n} beyond hard cap {HARD_ORDER_CAP}")
        if self.n > SOFT_ORDER_CAP and not self.allow_large:
            raise ValueError(
                f"order {self.n} beyond default cap {SOFT_ORDER_CAP}; "
                "set allow_large to override")


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

_AUT_CAP = 48


def _min_order_py(n: int, adj: tuple[int, ...] | list[int]) -> tuple[list[int], list[tuple[int, ...]]]:
    """Vertex order realizing the minimal upper-triangle bit string, plus the
    automorphisms discovered along the way.

    Position k contributes the adjacency bits of its vertex to positions
    0..k-1 (position 0 most significant), so prefixes of the order fix
    prefixes of the bit string and admit lexicographic branch-and-bound.
    Two prunings keep the search small, both exploiting symmetries of the
    input: twin vertices are interchangeable by a transposition, and every
    pair of orderings reaching the same minimal string exposes an
    automorphism, under which candidates in one orbit need only one branch.
    Discovered automorphisms (as vertex maps) are returned for reuse.
    """
    if n == 1:
        return [0], []
    best = [_INF_CHUNK] * n
    best_order = [0] * n
    have_best = False
    chosen: list[int] = []
    auts: list[tuple[int, ...]] = []
    aut_seen: set[tuple[int, ...]] = set()
    full = (1 << n) - 1

    def record(sigma: tuple[int, ...]) -> None:
        if len(auts) < _AUT_CAP and sigma not in aut_seen and any(
                sigma[i] != i for i in range(n)):
            aut_seen.add(sigma)
            auts.append(sigma)

    def dfs(level: int, remaining: int, pattern: list[int], improved: bool) -> None:
        nonlocal have_best
        if level == n:
            if have_best and not improved:
                sigma = [0] * n
                for i, v in enumerate(chosen):
                    sigma[v] = best_order[i]
                record(tuple(sigma))
            best_order[:] = chosen
            have_best = True
            return
        m = _INF_CHUNK
        cands: list[int] = []
        r = remaining
        while r:
            low = r & -r
            u = low.bit_length() - 1
            r ^= low
            p = pattern[u]
            if p < m:
                m = p
                cands = [u]
            elif p == m:
                cands.append(u)
        if m > best[level]:
            return
        if m < best[level]:
            best[level] = m
            for i in range(level + 1, n):
                best[i] = _INF_CHUNK
            improved = True
        if len(cands) > 1:
            reps: list[int] = []
            for u in cands:
                au = adj[u]
                dup = False
                for v in reps:
                    if au & ~(1 << v) == adj[v] & ~(1 << u):
                        sigma = list(range(n))
                        sigma[u], sigma[v] = v, u
                        record(tuple(sigma))
                        dup = True
                        break
                if not dup:
                    reps.append(u)
            cands = reps
        if len(cands) > 1 and auts:
            fixing = [s for s in auts if all(s[c] == c for c in chosen)]
            if fixing:
                cand_mask = 0
                for u in cands:
                    cand_mask |= 1 << u
                kept: list[int] = []
                dropped = 0
                for u in cands:
                    if dropped >> u & 1:
                        continue
                    kept.append(u)
                    orbit = 1 << u
                    stack = [u]
                    while stack:
                        x = stack.pop()
                        for s in fixing:
                            y = s[x]
                            if not orbit >> y & 1:
                                orbit |= 1 << y
                                stack.append(y)
                    dropped |= orbit & cand_mask
                cands = kept
        for u in cands:
            chosen.append(u)
            rest = remaining ^ (1 << u)
            au = adj[u]
            child = pattern[:]
            r = rest
            while r:
                low = r & -r
                w = low.bit_length() - 1
                r ^= low
                child[w] = child[w] << 1 | (au >> w & 1)
            dfs(level + 1, rest, child, improved)
            chosen.pop()

    dfs(0, full, [0] * n, False)
    return best_order, auts


def _min_order(n: int, adj) -> tuple[list[int], list[tuple[int, ...]]]:
    if _fastcore.HAVE_NUMBA:
        return _fastcore.min_order_fast(n, adj)
    return _min_order_py(n, adj)


def _relabeled_rows(n: int, adj, pos: list[int]) -> tuple[int, ...]:
    rows = [0] * n
    for old in range(n):
        p = pos[old]
        row = adj[old]
        while row:
            low = row & -row
            rows[p] |= 1 << pos[low.bit_length() - 1]
            row ^= low
    return tuple(rows)


def _canonical_rows(n: int, adj: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    order, _ = _min_order(n, adj)
    pos = [0] * n
    for newp, old in enumerate(order):
        pos[old] = newp
    return _relabeled_rows(n, adj, pos)


@dataclass(frozen=True)
class CanonicalForm:
    """Permutation-invariant identifier: equal forms mean isomorphic graphs."""

    n: int
    bits: bytes  # packed minimal upper-triangle bit string, zero-padded

    def to_graph(self) -> Graph:
        """Unpack back into the canonical representative."""
        rows = [0] * self.n
        total = self.n * (self.n - 1) // 2
        stream = int.from_bytes(self.bits, "big") >> ((-total) % 8)
        idx = total - 1
        for col in range(1, self.n):
            for row in range(col):
                if stream >> idx & 1:
                    rows[row] |= 1 << col
                    rows[col] |= 1 << row
                idx -= 1
        return Graph(self.n, tuple(rows))

    def graph6(self) -> str:
        return to_graph6(self.to_graph())


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > HARD_ORDER_CAP:
        raise ValueError(f"canonical form capped at order {HARD_ORDER_CAP}")
    rows = _canonical_rows(g.n, g.adj)
    acc = 0
    total = 0
    for col in range(1, g.n):
        acc = acc << col | (_column_bits(rows, col))
        total += col
    pad = (-total) % 8
    acc <<= pad
    return CanonicalForm(g.n, acc.to_bytes((total + pad) // 8, "big"))


def _column_bits(rows: tuple[int, ...], col: int) -> int:
    value = 0
    for row in range(col):
        value = value << 1 | (rows[row] >> col & 1)
    return value


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled representative of g's isomorphism class."""
    if g.n > HARD_ORDER_CAP:
        raise ValueError(f"canonical form capped at order {HARD_ORDER_CAP}")
    order, _ = _min_order(g.n, g.adj)
    sigma = [0] * g.n
    for newp, old in enumerate(order):
        sigma[old] = newp
    return permute(g, sigma)


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_graph(g))


# ---------------------------------------------------------------------------
# augmentation
# ---------------------------------------------------------------------------

@dataclass
class _Budget:
    deadline: float | None
    remaining: int | None

    @staticmethod
    def from_config(config: GeneratorConfig) -> "_Budget":
        deadline = None
        if config.max_seconds is not None:
            deadline = time.monotonic() + config.max_seconds
        return _Budget(deadline, config.max_graphs)

    def check_time(self, emitted: int) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExhausted("wall-clock budget exhausted", emitted)

    def count_one(self, emitted: int) -> None:
        if self.remaining is not None:
            self.remaining -= 1
            if self.remaining < 0:
                raise BudgetExhausted("graph-count budget exhausted", emitted)


def _wheel_free_child(rows: list[int], new_mask: int) -> bool:
    """Parent is wheel-free; only neighborhoods touched by the new vertex
    (its own, and those of its neighbors) can have gained a cycle."""
    if new_mask.bit_count() >= 3 and not forest_on_rows(rows, new_mask):
        return False
    m = new_mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        nb = rows[v]
        if nb.bit_count() >= 3 and not forest_on_rows(rows, nb):
            return False
    return True


# representative adjacency rows plus automorphism generators found for them
_Rep = tuple[tuple[int, ...], list[tuple[int, ...]]]
_REP_CACHE: dict[tuple[int, str], list[_Rep]] = {}


def _perm_mask(sigma: tuple[int, ...], mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << sigma[low.bit_length() - 1]
        mask ^= low
    return out


def _child_rows(n: int, parent: _Rep, start_mask: int,
                check_wheel: bool) -> Iterator[list[int]]:
    """Augmentations of one parent, one neighborhood mask per orbit of the
    parent's known automorphisms (automorphic masks give isomorphic
    children, and the surviving mask is the smallest of its orbit, so the
    emitted stream is identical to the unpruned one)."""
    rows, gens = parent
    top_bit = 1 << (n - 1)
    seen_masks = 0
    for mask in range(start_mask, top_bit):
        if seen_masks >> mask & 1:
            continue
        if gens:
            orbit = 1 << mask
            stack = [mask]
            while stack:
                x = stack.pop()
                for sigma in gens:
                    y = _perm_mask(sigma, x)
                    if not orbit >> y & 1:
                        orbit |= 1 << y
                        stack.append(y)
            seen_masks |= orbit
        child = [rows[v] | (top_bit if mask >> v & 1 else 0)
                 for v in range(n - 1)]
        child.append(mask)
        if check_wheel and not _wheel_free_child(child, mask):
            continue
        yield child


def _canonical_children(n: int, parent: _Rep, start_mask: int,
                        check_wheel: bool,
                        buf) -> Iterator[tuple[int, ...]]:
    """Canonical rows of every surviving augmentation of one parent."""
    if buf is not None:
        count = _fastcore.expand_parent_fast(
            n, parent[0], parent[1], start_mask, check_wheel, buf)
        for i in range(count):
            yield tuple(buf[i].tolist())
    else:
        for child in _child_rows(n, parent, start_mask, check_wheel):
            yield _canonical_rows(n, child)


def _expansion_buffer(n: int):
    if not _fastcore.HAVE_NUMBA:
        return None
    return np.empty((1 << (n - 1), n), dtype=np.int64)


def _representatives(n: int, predicate: str, budget: _Budget | None,
                     progress: Callable[[int, int], None] | None = None) -> list[_Rep]:
    key = (n, predicate)
    cached = _REP_CACHE.get(key)
    if cached is not None:
        return cached
    if n == 1:
        reps: list[_Rep] = [((0,), [])]
        _REP_CACHE[key] = reps
        return reps
    parents = _representatives(n - 1, predicate, budget)
    reps = []
    seen: set[tuple[int, ...]] = set()
    check_wheel = predicate in ("wheel_free", "connected_wheel_free")
    start_mask = 1 if predicate == "connected_wheel_free" else 0
    buf = _expansion_buffer(n)
    for pi, parent in enumerate(parents):
        if budget is not None:
            budget.check_time(0)
        for canon in _canonical_children(n, parent, start_mask, check_wheel, buf):
            if canon in seen:
                continue
            seen.add(canon)
            _, auts = _min_order(n, canon)
            reps.append((canon, auts))
        if progress is not None:
            progress(pi + 1, len(parents))
    _REP_CACHE[key] = reps
    return reps


def enumerate_graphs(config: GeneratorConfig) -> Iterator[Graph]:
    """All isomorphism classes of the configured order and predicate, one
    canonical representative each, in a deterministic order."""
    config.validate()
    budget = _Budget.from_config(config)
    emitted = 0
    reps = _representatives(config.n, config.predicate, budget,
                            progress=config.progress)
    for rows, _ in reps:
        budget.check_time(emitted)
        budget.count_one(emitted)
        yield Graph(config.n, rows)
        emitted += 1


def enumerate_wheel_free(n: int, **kwargs) -> Iterator[Graph]:
    return enumerate_graphs(GeneratorConfig(n, "wheel_free", **kwargs))


def clear_cache() -> None:
    _REP_CACHE.clear()


# ---------------------------------------------------------------------------
# disk spooling with resume
# ---------------------------------------------------------------------------

def spool(config: GeneratorConfig, out_path: str | Path,
          checkpoint_path: str | Path | None = None) -> int:
    """Write one graph6 line per class to out_path; returns the class count.

    With a checkpoint file (two lines: order, then last completed parent
    index) an interrupted run resumes after the recorded parent, reloading
    the dedup set from the partial output.
    """
    config.validate()
    out_path = Path(out_path)
    budget = _Budget.from_config(config)
    if config.n == 1:
        out_path.write_text(to_graph6(Graph(1, (0,))) + "\n")
        return 1
    parents = _representatives(config.n - 1, config.predicate, budget)
    done_parent = -1
    seen: set[tuple[int, ...]] = set()
    emitted = 0
    if (checkpoint_path is not None and Path(checkpoint_path).exists()
            and out_path.exists()):
        lines = Path(checkpoint_path).read_text().split()
        if len(lines) >= 2 and int(lines[0]) == config.n:
            done_parent = int(lines[1])
            for line in out_path.read_text().splitlines():
                g = from_graph6(line)
                seen.add(g.adj)
                emitted += 1
    mode = "a" if done_parent >= 0 else "w"
    check_wheel = config.predicate in ("wheel_free", "connected_wheel_free")
    start_mask = 1 if config.predicate == "connected_wheel_free" else 0
    buf = _expansion_buffer(config.n)
    with open(out_path, mode) as handle:
        for pi, parent in enumerate(parents):
            if pi <= done_parent:
                continue
            budget.check_time(emitted)
            for canon in _canonical_children(config.n, parent, start_mask,
                                             check_wheel, buf):
                if canon in seen:
                    continue
                budget.count_one(emitted)
                seen.add(canon)
                handle.write(to_graph6(Graph(config.n, canon)) + "\n")
                emitted += 1
            handle.flush()
            if checkpoint_path is not None:
                Path(checkpoint_path).write_text(f"{config.n}\n{pi}\n")
            if config.progress is not None:
                config.progress(pi + 1, len(parents))
    return emitted
