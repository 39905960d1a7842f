import random

import pytest

from wheelfree.graphs import (Graph, GraphError, complement, complete,
                              cycle, delete_edge, delete_vertex,
                              disjoint_union, edges_between, empty,
                              from_graph6, g_ab, g_abcd, h_n, induced, join,
                              k_copies, mask_of, matching_join, path, permute,
                              to_graph6, wheel)

from conftest import random_graph


def test_standard_constructors():
    k4 = complete(4)
    assert k4.edge_count() == 6
    assert all(k4.degree(v) == 3 for v in range(4))
    c7 = cycle(7)
    assert c7.edge_count() == 7
    assert all(c7.degree(v) == 2 for v in range(7))
    assert path(2).edge_count() == 1
    assert path(5).edge_count() == 4
    assert empty(6).edge_count() == 0


def test_wheel():
    assert wheel(4) == complete(4)
    w5 = wheel(5)
    assert w5.degree(0) == 4
    assert all(w5.degree(v) == 3 for v in range(1, 5))
    assert wheel(6).edge_count() == 10


def test_join_union_complement():
    g = join(complete(2), empty(3))
    assert g.n == 5 and g.edge_count() == 7
    f = complement(cycle(7))
    assert f.degree_sequence() == (4,) * 7
    two_k2 = disjoint_union(complete(2), complete(2))
    assert two_k2.n == 4 and two_k2.edge_count() == 2
    assert k_copies(3, complete(2)).edge_count() == 3


def test_join_edge_identity():
    rng = random.Random(3)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 6))
        h = random_graph(rng, rng.randint(1, 6))
        j = join(g, h)
        assert j.edge_count() == g.edge_count() + h.edge_count() + g.n * h.n


def test_complement_involution():
    rng = random.Random(4)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 10))
        assert complement(complement(g)) == g


def test_degree_sum():
    rng = random.Random(5)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 12))
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.edge_count()


def test_hn_small_cases():
    g5 = h_n(5)
    assert g5.n == 5 and g5.edge_count() == 7
    assert g5.degree_sequence() == (4, 4, 2, 2, 2)
    g7 = h_n(7)
    assert g7.n == 7 and g7.edge_count() == 14
    g6 = h_n(6)
    assert g6.n == 6
    # the leftover vertex of the matching side is isolated within it
    left = mask_of(range(3))
    inner = induced(g6, left)
    assert inner.degree_sequence() == (1, 1, 0)


def test_hn_orders():
    for n in range(4, 65):
        assert h_n(n).n == n


def test_matching_join():
    assert matching_join(2, 0, 3) == h_n(7)
    assert matching_join(1, 1, 3) == h_n(6)
    g = matching_join(2, 1, 4)
    assert g.n == 9 and g.edge_count() == 2 + 5 * 4
    with pytest.raises(GraphError):
        matching_join(0, 0, 3)


def test_spider():
    star = g_ab(3, 0)
    assert star.n == 4 and star.degree(0) == 3
    spider = g_ab(0, 2)
    assert spider.n == 5 and spider.edge_count() == 4
    assert spider.is_connected()
    g = g_ab(2, 1)
    assert g.n == 5 and g.degree(0) == 3


def test_spider_is_tree():
    for a in range(0, 5):
        for b in range(0, 5):
            g = g_ab(a, b)
            assert g.n == a + 2 * b + 1
            assert g.edge_count() == a + 2 * b
            assert g.is_connected()


def test_apex_spider():
    assert g_abcd(3, 1, 0, 0) == join(complete(1), g_ab(3, 1))
    g = g_abcd(3, 1, 0, 2)
    assert g.n == 3 + 2 + 0 + 2 + 2
    outer = range(g.n - 2, g.n)
    assert all(g.degree(z) == 5 for z in outer)
    for a, b, c, d in [(1, 1, 1, 1), (2, 3, 1, 0), (0, 2, 0, 4)]:
        assert g_abcd(a, b, c, d).n == a + 2 * b + 2 * c + d + 2
    # outer vertices avoid the spider center (vertex 1) but reach the rest
    g = g_abcd(2, 2, 1, 1)
    spider_n = 2 + 4 + 1
    for z in range(1 + spider_n, g.n):
        assert not g.has_edge(z, 1)
        assert all(g.has_edge(z, v) for v in range(2, 1 + spider_n))


def test_neighborhoods():
    star = join(complete(1), empty(3))
    assert star.second_neighborhood(0) == 0
    assert star.second_neighborhood(1) == mask_of([2, 3])
    g5 = h_n(5)
    right = mask_of([2, 3, 4])
    for v in (2, 3, 4):
        assert g5.second_neighborhood(v) == right ^ (1 << v)
    assert edges_between(g5, mask_of([0, 1]), right) == 6
    with pytest.raises(GraphError):
        edges_between(g5, mask_of([0, 1]), mask_of([1, 2]))


def test_induced_and_deletion():
    g = cycle(5)
    sub = induced(g, mask_of([0, 1, 2]))
    assert sub.n == 3 and sub.edge_count() == 2
    assert delete_edge(g, 0, 1).edge_count() == 4
    with pytest.raises(GraphError):
        delete_edge(g, 0, 2)
    assert delete_vertex(g, 0) == path(4)


def test_permute_roundtrip():
    rng = random.Random(6)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 9))
        sigma = list(range(g.n))
        rng.shuffle(sigma)
        h = permute(g, sigma)
        inverse = [0] * g.n
        for old, new in enumerate(sigma):
            inverse[new] = old
        assert permute(h, inverse) == g
        assert sorted(h.degree_sequence()) == sorted(g.degree_sequence())


def test_validation_errors():
    with pytest.raises(GraphError):
        empty(0)
    with pytest.raises(GraphError):
        empty(65)
    with pytest.raises(GraphError):
        cycle(2)
    with pytest.raises(GraphError):
        wheel(3)
    with pytest.raises(GraphError):
        h_n(3)
    with pytest.raises(GraphError):
        join(complete(40), complete(30))
    with pytest.raises(GraphError):
        Graph(2, (1, 0))  # loop at vertex 0
    with pytest.raises(GraphError):
        Graph(2, (2, 0))  # asymmetric
    with pytest.raises(GraphError):
        Graph(2, (4, 0))  # bit beyond order
    with pytest.raises(GraphError):
        complete(3).degree(3)


def test_connectivity():
    assert cycle(6).is_connected()
    assert not disjoint_union(complete(2), complete(3)).is_connected()
    assert empty(1).is_connected()
    assert not empty(2).is_connected()


# graph6 -------------------------------------------------------------------

def test_graph6_known_encodings():
    assert to_graph6(complete(3)) == "Bw"
    assert to_graph6(path(3)) == "Bg"
    assert to_graph6(empty(1)) == "@"
    # hand-packed: C4 triangle bits (0,1)(0,2)(1,2)(0,3)(1,3)(2,3)
    # = 1,0,1,1,0,1 -> 101101 -> 45 + 63 = 'l'
    assert to_graph6(cycle(4)) == "Cl"


def test_graph6_against_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(8)
    cases = [complete(3), cycle(4), h_n(9), complement(cycle(7)), h_n(40)]
    for _ in range(25):
        cases.append(random_graph(rng, rng.randint(1, 25)))
    for g in cases:
        other = nx.Graph()
        other.add_nodes_from(range(g.n))
        other.add_edges_from(g.edges())
        theirs = nx.to_graph6_bytes(other, header=False).decode().strip()
        assert to_graph6(g) == theirs
        back = nx.from_graph6_bytes(to_graph6(g).encode())
        assert sorted(map(sorted, back.edges())) == sorted(map(list, g.edges()))


def test_graph6_roundtrip():
    rng = random.Random(7)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 20))
        assert from_graph6(to_graph6(g)) == g
    for n in (62, 63, 64):
        g = random_graph(rng, n, 0.2)
        text = to_graph6(g)
        assert from_graph6(text) == g
        if n > 62:
            assert text.startswith("~")


def test_graph6_errors():
    with pytest.raises(GraphError):
        from_graph6("")
    with pytest.raises(GraphError):
        from_graph6("B")  # truncated body
    with pytest.raises(GraphError):
        from_graph6("Bww")  # trailing garbage
    with pytest.raises(GraphError):
        from_graph6("B\x1f")  # character below range
    with pytest.raises(GraphError):
        from_graph6("~~")  # truncated long header
