"""Simple undirected graphs on up to 64 vertices, stored as bitmask rows.

Vertex sets are plain ints (bit i = vertex i), so neighborhood algebra is
bitwise and a whole neighbor set fits in one machine word.  All graphs are
immutable; every operation returns a fresh Graph.

Named families
--------------
``h_n(n)`` builds the matching-join family: a perfect matching on roughly
n/2 vertices (plus one leftover isolated vertex when n = 2 mod 4) joined
completely to an independent set.  The exact split depends on n mod 4:

    n = 1 mod 4:  ((n-1)/4) K2            joined to  ((n+1)/2) K1
    n = 3 mod 4:  ((n+1)/4) K2            joined to  ((n-1)/2) K1
    n = 0 mod 4:  (n/4) K2                joined to  (n/2) K1
    n = 2 mod 4:  ((n-2)/4) K2 union K1   joined to  (n/2) K1

``g_ab(a, b)`` is the spider tree used as a neighborhood shape: a center
u0 with a pendant leaves and b legs of length two (u0 - v_i - w_i).  The
shape is pinned down by its equitable quotient rows: u0 is adjacent to
every leaf and every v_i but to no w_i.  ``g_abcd`` wraps it in an apex
vertex u joined to the whole spider, plus a second neighborhood of c K2
and d K1 whose vertices are each adjacent to all of the spider except u0.

Vertex layouts of the named families are fixed (clique/matching side
first, then the independent side; apex first in g_abcd) so partitions and
canonical-form tests are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or query."""


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask for a collection of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: ``adj[v]`` is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"order {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has neighbor bits beyond order")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def neighborhood(self, v: int) -> int:
        """Open neighborhood N(v) as a bitmask."""
        self._check_vertex(v)
        return self.adj[v]

    def second_neighborhood(self, v: int) -> int:
        """Vertices at distance exactly 2 from v, as a bitmask."""
        self._check_vertex(v)
        nb = self.adj[v]
        reach = 0
        for u in bits(nb):
            reach |= self.adj[u]
        return reach & ~nb & ~(1 << v)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ordered pairs (u, v) with u < v."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield u, v

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= self.adj[v]
            frontier = grow & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on vertices 0..n-1 with the given edges."""
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {u}-{v} out of range for order {n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# standard constructors
# ---------------------------------------------------------------------------

def empty(n: int) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"order {n} outside 1..{MAX_VERTICES}")
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"order {n} outside 1..{MAX_VERTICES}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs order >= 3, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(n: int) -> Graph:
    """Hub vertex 0 joined to the cycle on vertices 1..n-1."""
    if n < 4:
        raise GraphError(f"wheel needs order >= 4, got {n}")
    return join(complete(1), cycle(n - 1))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphError(f"combined order {n} exceeds {MAX_VERTICES}")
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphError(f"combined order {n} exceeds {MAX_VERTICES}")
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = [row | h_mask for row in g.adj]
    rows += [(row << g.n) | g_mask for row in h.adj]
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row ^ (1 << v)) for v, row in enumerate(g.adj)))


def k_copies(k: int, g: Graph) -> Graph:
    if k < 1:
        raise GraphError(f"need at least one copy, got {k}")
    out = g
    for _ in range(k - 1):
        out = disjoint_union(out, g)
    return out


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

def h_n(n: int) -> Graph:
    """Matching-join family; the four cases split on n mod 4 (see module docs).

    Layout: matching side occupies vertices 0..k-1 (pairs (0,1), (2,3), ...,
    leftover isolated vertex last), independent side follows.
    """
    if n < 4:
        raise GraphError(f"family defined for order >= 4, got {n}")
    r = n % 4
    if r == 1:
        pairs, lone, right = (n - 1) // 4, 0, (n + 1) // 2
    elif r == 3:
        pairs, lone, right = (n + 1) // 4, 0, (n - 1) // 2
    elif r == 0:
        pairs, lone, right = n // 4, 0, n // 2
    else:
        pairs, lone, right = (n - 2) // 4, 1, n // 2
    left = k_copies(pairs, complete(2))
    if lone:
        left = disjoint_union(left, empty(1))
    return join(left, empty(right))


def matching_join(pairs: int, singles: int, independent: int) -> Graph:
    """(pairs*K2 union singles*K1) joined to independent*K1.

    Generalizes h_n to the families appearing as search rivals; layout is
    pairs first, then singles, then the independent side.
    """
    if pairs < 0 or singles < 0 or independent < 1:
        raise GraphError("need nonnegative sides and a nonempty independent set")
    if pairs == 0 and singles == 0:
        raise GraphError("left side must be nonempty")
    left = k_copies(pairs, complete(2)) if pairs else empty(singles)
    if pairs and singles:
        left = disjoint_union(left, empty(singles))
    return join(left, empty(independent))


def g_ab(a: int, b: int) -> Graph:
    """Spider tree on a+2b+1 vertices: center u0 = vertex 0, leaves 1..a,
    mid vertices v_i = a+1..a+b, feet w_i = a+b+1..a+2b (v_i - w_i paired)."""
    if a < 0 or b < 0:
        raise GraphError("leaf and leg counts must be nonnegative")
    n = a + 2 * b + 1
    if n > MAX_VERTICES:
        raise GraphError(f"order {n} exceeds {MAX_VERTICES}")
    edges = [(0, i) for i in range(1, a + b + 1)]
    edges += [(a + i, a + b + i) for i in range(1, b + 1)]
    return from_edges(n, edges)


def g_abcd(a: int, b: int, c: int, d: int) -> Graph:
    """Apex vertex 0 joined to the spider g_ab(a, b) on vertices 1..a+2b+1,
    then a second neighborhood of c K2-pairs and d isolated vertices, each
    adjacent to every spider vertex except the center u0 (= vertex 1)."""
    if min(a, b, c, d) < 0:
        raise GraphError("all part sizes must be nonnegative")
    spider = g_ab(a, b)
    core = join(complete(1), spider)
    n = core.n + 2 * c + d
    if n > MAX_VERTICES:
        raise GraphError(f"order {n} exceeds {MAX_VERTICES}")
    rows = list(core.adj) + [0] * (2 * c + d)
    near = ((1 << core.n) - 1) & ~0b11  # spider minus apex (0) and center u0 (1)
    for i in range(core.n, n):
        rows[i] |= near
        for v in bits(near):
            rows[v] |= 1 << i
    for i in range(c):
        u, v = core.n + 2 * i, core.n + 2 * i + 1
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# subgraphs and rewiring
# ---------------------------------------------------------------------------

def edges_between(g: Graph, s: int, t: int) -> int:
    """Number of edges with one end in vertex set s and the other in t."""
    if s & t:
        raise GraphError("vertex sets overlap")
    full = (1 << g.n) - 1
    if (s | t) & ~full:
        raise GraphError("vertex set outside graph")
    return sum((g.adj[v] & t).bit_count() for v in bits(s))


def induced(g: Graph, s: int) -> Graph:
    """Subgraph induced on vertex set s, relabeled to 0..|s|-1."""
    if s & ~((1 << g.n) - 1):
        raise GraphError("vertex set outside graph")
    keep = list(bits(s))
    if not keep:
        raise GraphError("induced subgraph must be nonempty")
    pos = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for v in keep:
        for u in bits(g.adj[v] & s):
            rows[pos[v]] |= 1 << pos[u]
    return Graph(len(keep), tuple(rows))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"no edge {u}-{v} to delete")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    g._check_vertex(v)
    if g.n == 1:
        raise GraphError("cannot delete the only vertex")
    return induced(g, ((1 << g.n) - 1) ^ (1 << v))


def permute(g: Graph, sigma: Iterable[int]) -> Graph:
    """Relabel: vertex v becomes sigma[v]; sigma must be a permutation."""
    s = list(sigma)
    if sorted(s) != list(range(g.n)):
        raise GraphError("not a permutation of the vertex range")
    rows = [0] * g.n
    for v in range(g.n):
        for u in bits(g.adj[v]):
            rows[s[v]] |= 1 << s[u]
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# graph6 text format
# ---------------------------------------------------------------------------
# Standard encoding: size header (chr(63+n) for n <= 62, else '~' plus three
# chars carrying 18 bits), then the upper triangle in column-major order
# packed 6 bits per character, each offset by 63.

def _triangle_bits(g: Graph) -> Iterator[int]:
    for col in range(1, g.n):
        for row in range(col):
            yield g.adj[row] >> col & 1


def to_graph6(g: Graph) -> str:
    if g.n <= 62:
        head = chr(63 + g.n)
    else:
        head = "~" + "".join(chr(63 + (g.n >> sh & 0x3F)) for sh in (12, 6, 0))
    body = []
    acc, count = 0, 0
    for bit in _triangle_bits(g):
        acc = acc << 1 | bit
        count += 1
        if count == 6:
            body.append(chr(63 + acc))
            acc, count = 0, 0
    if count:
        body.append(chr(63 + (acc << (6 - count))))
    return head + "".join(body)


def from_graph6(text: str) -> Graph:
    text = text.strip()
    if not text:
        raise GraphError("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in text):
        raise GraphError("graph6 character out of range")
    if text[0] == "~":
        if len(text) < 4:
            raise GraphError("truncated graph6 size header")
        n = 0
        for ch in text[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = text[4:]
    else:
        n = ord(text[0]) - 63
        body = text[1:]
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"graph6 order {n} outside 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6 body has {len(body)} characters, expected {need}")
    stream = 0
    for ch in body:
        stream = stream << 6 | (ord(ch) - 63)
    total = 6 * need
    if nbits < total and stream & ((1 << (total - nbits)) - 1):
        raise GraphError("nonzero padding bits in graph6 body")
    rows = [0] * n
    idx = total - 1
    for col in range(1, n):
        for row in range(col):
            if stream >> idx & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            idx -= 1
    return Graph(n, tuple(rows))
