"""Wheel detection: fast neighborhood-forest test plus a brute-force oracle.

A wheel subgraph is a hub vertex together with a cycle inside its open
neighborhood, so a graph is wheel-free exactly when every open neighborhood
induces a forest.  ``is_wheel_free`` tests that directly; the independent
``brute_force_contains_wheel`` enumerates all cycles and looks for a
dominating vertex, and the two are cross-checked over every isomorphism
class of small order in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, induced


@dataclass(frozen=True)
class WheelWitness:
    """A hub plus an ordered rim cycle found inside the hub's neighborhood."""

    hub: int
    rim: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        if len(self.rim) < 3:
            raise ValueError("rim shorter than a triangle")
        if len(set(self.rim)) != len(self.rim):
            raise ValueError("rim repeats a vertex")
        if self.hub in self.rim:
            raise ValueError("hub lies on its own rim")
        for v in self.rim:
            if not g.has_edge(self.hub, v):
                raise ValueError(f"hub {self.hub} not adjacent to rim vertex {v}")
        k = len(self.rim)
        for i in range(k):
            if not g.has_edge(self.rim[i], self.rim[(i + 1) % k]):
                raise ValueError("rim is not a cycle")


def forest_on_rows(adj, mask: int) -> bool:
    """Is the subgraph induced on the vertex mask acyclic?  Union-find with
    early exit on the first cycle edge; adj is a sequence of bitmask rows."""
    parent = {v: v for v in bits(mask)}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in bits(mask):
        for u in bits(adj[v] & mask):
            if u >= v:
                break
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def _forest_on(g: Graph, mask: int) -> bool:
    return forest_on_rows(g.adj, mask)


def is_wheel_free(g: Graph) -> bool:
    for v in range(g.n):
        nb = g.adj[v]
        if nb.bit_count() >= 3 and not _forest_on(g, nb):
            return False
    return True


def _shortest_cycles(h: Graph) -> list[tuple[int, ...]]:
    """All shortest cycles of h, each listed with its smallest vertex first
    and in the lexicographically smaller of its two directions."""
    best_len = h.n + 1
    found: list[tuple[int, ...]] = []

    def extend(start: int, pathv: list[int], seen: int) -> None:
        nonlocal best_len, found
        if len(pathv) > best_len:
            return
        last = pathv[-1]
        if len(pathv) >= 3 and h.adj[last] >> start & 1:
            if len(pathv) < best_len:
                best_len = len(pathv)
                found = []
            if len(pathv) == best_len:
                rev = (start,) + tuple(reversed(pathv[1:]))
                found.append(min(tuple(pathv), rev))
            return
        if len(pathv) == best_len:
            return
        for u in bits(h.adj[last] & ~seen):
            if u > start:
                extend(start, pathv + [u], seen | 1 << u)

    for s in range(h.n):
        extend(s, [s], 1 << s)
    return found


def find_wheel_witness(g: Graph) -> WheelWitness | None:
    """Deterministic witness: lowest hub, then shortest rim, then the
    lexicographically smallest rim; None exactly when g is wheel-free."""
    for hub in range(g.n):
        nb = g.adj[hub]
        if nb.bit_count() < 3 or _forest_on(g, nb):
            continue
        local = induced(g, nb)
        labels = list(bits(nb))
        rims = _shortest_cycles(local)
        rim = min(tuple(labels[i] for i in r) for r in rims)
        return WheelWitness(hub, rim)
    return None


def brute_force_contains_wheel(g: Graph) -> bool:
    """Cycle-enumeration oracle: any cycle dominated by an outside vertex?

    Independent of the neighborhood-forest test; meant for small orders.
    """
    full = (1 << g.n) - 1

    def search(start: int, last: int, seen: int, length: int) -> bool:
        if length >= 3 and g.adj[last] >> start & 1:
            for w in bits(full & ~seen):
                if g.adj[w] & seen == seen:
                    return True
        for u in bits(g.adj[last] & ~seen):
            if u > start and search(start, u, seen | 1 << u, length + 1):
                return True
        return False

    return any(search(s, s, 1 << s, 1) for s in range(g.n))


@dataclass(frozen=True)
class PairViolation:
    """A vertex pair whose common neighborhood induces a forbidden subgraph."""

    u: int
    v: int
    kind: str  # "p3" or "k2"


def check_pair_neighborhoods(g: Graph) -> list[PairViolation]:
    """Common-neighborhood diagnostics.

    For every unordered pair u != v, the subgraph induced on N(u) & N(v)
    must avoid a path on three vertices, and must avoid even a single edge
    when uv is itself an edge.  Wheel-free graphs produce no violations.
    """
    out: list[PairViolation] = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = g.adj[u] & g.adj[v]
            if common.bit_count() < 2:
                continue
            has_edge = any(g.adj[w] & common for w in bits(common))
            has_p3 = any((g.adj[w] & common).bit_count() >= 2 for w in bits(common))
            if has_p3:
                out.append(PairViolation(u, v, "p3"))
            if has_edge and g.adj[u] >> v & 1:
                out.append(PairViolation(u, v, "k2"))
    return out


def neighborhood_components(g: Graph, v: int) -> int:
    """Number of connected components of the subgraph induced on N(v)."""
    mask = g.adj[v]
    count = 0
    while mask:
        count += 1
        low = mask & -mask
        comp = low
        frontier = low
        while frontier:
            grow = 0
            for w in bits(frontier):
                grow |= g.adj[w] & mask
            frontier = grow & ~comp
            comp |= frontier
        mask &= ~comp
    return count
