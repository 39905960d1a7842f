import random

from wheelfree.enumeration import GeneratorConfig, enumerate_graphs
from wheelfree.graphs import (complement, complete, cycle, delete_edge,
                              delete_vertex, h_n, induced, join, path, wheel)
from wheelfree.spectral import walk_count_r
from wheelfree.wheels import (brute_force_contains_wheel, check_pair_neighborhoods,
                              find_wheel_witness, is_wheel_free,
                              neighborhood_components)

from conftest import random_graph


def test_wheel_free_basics():
    assert not is_wheel_free(complete(4))
    assert not is_wheel_free(wheel(7))
    for n in range(3, 13):
        assert is_wheel_free(cycle(n))
    for n in range(4, 21):
        assert is_wheel_free(h_n(n))
    assert is_wheel_free(complement(cycle(7)))
    assert is_wheel_free(path(9))


def test_witness_golden():
    w = find_wheel_witness(wheel(6))
    assert w is not None
    assert w.hub == 0 and len(w.rim) == 5
    w.validate(wheel(6))

    assert find_wheel_witness(h_n(9)) is None

    g = join(complete(2), cycle(4))
    w = find_wheel_witness(g)
    assert w is not None
    w.validate(g)
    assert w.hub == 0
    assert w.rim == (1, 2, 3)  # shortest rim is a triangle through the join


def test_witness_determinism_and_validity():
    rng = random.Random(11)
    found = 0
    for _ in range(200):
        g = random_graph(rng, rng.randint(4, 9))
        w1 = find_wheel_witness(g)
        w2 = find_wheel_witness(g)
        assert w1 == w2
        assert (w1 is None) == is_wheel_free(g)
        if w1 is not None:
            w1.validate(g)
            found += 1
    assert found > 50


def test_brute_force_oracle_examples():
    assert brute_force_contains_wheel(wheel(5))
    assert not brute_force_contains_wheel(path(10))
    assert not brute_force_contains_wheel(cycle(9))
    assert brute_force_contains_wheel(complete(4))


def test_oracle_agreement_small_orders(warm_small_enumeration):
    for n in range(1, 7):
        for g in enumerate_graphs(GeneratorConfig(n, "all")):
            assert is_wheel_free(g) == (not brute_force_contains_wheel(g))


def test_oracle_agreement_random():
    rng = random.Random(12)
    for _ in range(150):
        g = random_graph(rng, rng.randint(4, 9))
        assert is_wheel_free(g) == (not brute_force_contains_wheel(g))


def test_hereditary_closure():
    rng = random.Random(13)
    checked = 0
    for _ in range(300):
        g = random_graph(rng, rng.randint(3, 9), 0.35)
        if not is_wheel_free(g):
            continue
        checked += 1
        for v in range(g.n):
            if g.n > 1:
                assert is_wheel_free(delete_vertex(g, v))
        for u, v in g.edges():
            assert is_wheel_free(delete_edge(g, u, v))
    assert checked > 100


def test_forest_identity():
    # wheel-free neighborhoods are forests: edges = vertices - components
    rng = random.Random(14)
    graphs = [h_n(n) for n in range(4, 15)] + [complement(cycle(7))]
    while len(graphs) < 60:
        g = random_graph(rng, rng.randint(4, 10), 0.3)
        if is_wheel_free(g):
            graphs.append(g)
    for g in graphs:
        for v in range(g.n):
            nb = g.neighborhood(v)
            e = induced(g, nb).edge_count() if nb else 0
            omega = neighborhood_components(g, v)
            assert e == g.degree(v) - omega


def test_pair_neighborhood_check():
    assert check_pair_neighborhoods(complete(5))
    assert check_pair_neighborhoods(h_n(8)) == []
    assert check_pair_neighborhoods(complement(cycle(7))) == []
    rng = random.Random(15)
    for _ in range(200):
        g = random_graph(rng, rng.randint(3, 8))
        if is_wheel_free(g):
            assert check_pair_neighborhoods(g) == []


def test_pair_check_edge_flags():
    # K4 minus nothing: every adjacent pair shares two adjacent vertices
    flags = check_pair_neighborhoods(complete(4))
    kinds = {(v.u, v.v, v.kind) for v in flags}
    assert (0, 1, "k2") in kinds
    assert (0, 1, "p3") not in kinds  # common neighborhood of an edge in K4 is K2


def test_walk_count_cross_module():
    # the two-step walk identity ties the wheel module's neighborhoods to
    # spectral walk counts on wheel-free inputs
    for n in range(4, 12):
        g = h_n(n)
        for v in range(g.n):
            nb = g.neighborhood(v)
            e_nb = induced(g, nb).edge_count() if nb else 0
            assert walk_count_r(g, v) >= g.degree(v) + 2 * e_nb
