import random
from fractions import Fraction

import numpy as np
import pytest

from wheelfree.enumeration import GeneratorConfig, enumerate_graphs
from wheelfree.graphs import (complete, cycle, disjoint_union, empty, g_abcd,
                              h_n, join, k_copies, mask_of, path, permute)
from wheelfree.quotient import (Partition, PartitionError, apex_spider_partition,
                                char_poly, char_poly_exact, coarsest_equitable,
                                is_equitable, is_largest_root, legs_only_top_below,
                                poly_eval, poly_shift, quotient_eigenvalues,
                                quotient_matrix, apex_spider_char_poly_check,
                                shares_top_eigenvalue)
from wheelfree.spectral import graph_matrix, jacobi_eigensystem

from conftest import random_graph

F = Fraction


def frac_rows(rows):
    return tuple(tuple(F(x) for x in row) for row in rows)


def test_partition_validation():
    with pytest.raises(PartitionError):
        Partition((0b11, 0b10))  # overlap
    with pytest.raises(PartitionError):
        Partition((0b11, 0))  # empty cell
    p = Partition((0b11, 0b100))
    assert p.k == 2 and p.sizes() == (2, 1)


def test_is_equitable():
    g = cycle(6)
    assert is_equitable(g, Partition(((1 << 6) - 1,)))
    g5 = h_n(5)
    p = Partition((mask_of([0, 1]), mask_of([2, 3, 4])))
    assert is_equitable(g5, p)
    # the two ends of a path are interchangeable
    p3 = path(3)
    assert is_equitable(p3, Partition((mask_of([0, 2]), mask_of([1]))))
    assert not is_equitable(p3, Partition((mask_of([0, 1]), mask_of([2]))))
    with pytest.raises(PartitionError):
        is_equitable(p3, Partition((mask_of([0, 1]),)))  # not covering


def test_coarsest_equitable_golden():
    assert coarsest_equitable(complete(8)).k == 1
    assert coarsest_equitable(cycle(9)).k == 1
    p = coarsest_equitable(h_n(6))
    assert p.cells == (mask_of([0, 1]), mask_of([2]), mask_of([3, 4, 5]))
    p = coarsest_equitable(h_n(5))
    assert p.cells == (mask_of([0, 1]), mask_of([2, 3, 4]))


def test_coarsest_equitable_apex_spider():
    # n = 13, apex degree 7, one long leg: six cells in construction layout
    g = g_abcd(4, 1, 0, 5)
    p = coarsest_equitable(g)
    assert p.cells == apex_spider_partition(4, 1, 5).cells


def test_coarsest_invariant_under_relabeling():
    rng = random.Random(31)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 9))
        p = coarsest_equitable(g)
        assert is_equitable(g, p)
        sigma = list(range(g.n))
        rng.shuffle(sigma)
        h = permute(g, sigma)
        q = coarsest_equitable(h)
        mapped = sorted(mask_of(sigma[v] for v in
                                [b for b in range(g.n) if cell >> b & 1])
                        for cell in p.cells)
        assert mapped == sorted(q.cells)


def test_quotient_golden_two_cell():
    for n in (5, 9, 13):
        p = coarsest_equitable(h_n(n))
        q = quotient_matrix(h_n(n), p)
        assert q.entries == frac_rows([[1, (n + 1) // 2], [(n - 1) // 2, 0]])


def test_quotient_golden_three_cell():
    q = quotient_matrix(h_n(6), coarsest_equitable(h_n(6)))
    assert q.entries == frac_rows([[1, 0, 3], [0, 0, 3], [2, 1, 0]])


def test_quotient_golden_q_matrix():
    for n in (4, 8):
        g = join(complete(2), empty(n - 2))
        p = coarsest_equitable(g, "signless_laplacian")
        q = quotient_matrix(g, p, "signless_laplacian")
        assert q.entries == frac_rows([[n, n - 2], [2, 2]])


def test_quotient_rejects_inequitable():
    with pytest.raises(PartitionError):
        quotient_matrix(path(3), Partition((mask_of([0, 1]), mask_of([2]))))


def test_quotient_integrality():
    rng = random.Random(32)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 9))
        q = quotient_matrix(g, coarsest_equitable(g))
        for row in q.entries:
            for x in row:
                assert x.denominator == 1 and x >= 0


def test_char_poly_golden():
    ident = frac_rows([[1, 0], [0, 1]])
    assert char_poly_exact(ident) == (F(1), F(-2), F(1))

    q = quotient_matrix(h_n(6), coarsest_equitable(h_n(6)))
    assert char_poly(q) == (F(3), F(-9), F(-1), F(1))

    q = quotient_matrix(h_n(10), coarsest_equitable(h_n(10)))
    assert char_poly(q) == (F(5), F(-25), F(-1), F(1))

    # lone-vertex variant: ((n-1)/4 pairs + K1) joined to (n-1)/2 singles
    for n in (9, 13):
        g = join(disjoint_union(k_copies((n - 1) // 4, complete(2)), empty(1)),
                 empty((n - 1) // 2))
        q = quotient_matrix(g, coarsest_equitable(g))
        expected = (F(n - 1, 2), F(-(n * n - 1), 4), F(-1), F(1))
        assert char_poly(q) == expected


def test_char_poly_against_numpy():
    rng = random.Random(33)
    for _ in range(30):
        k = rng.randint(1, 6)
        m = [[F(rng.randint(-4, 4)) for _ in range(k)] for _ in range(k)]
        coeffs = char_poly_exact(frac_rows(m))
        numpy_coeffs = np.poly(np.array([[float(x) for x in row] for row in m]))
        mine = [float(c) for c in reversed(coeffs)]
        assert np.allclose(mine, numpy_coeffs, atol=1e-6)


def test_poly_helpers():
    p = (F(3), F(-9), F(-1), F(1))  # x^3 - x^2 - 9x + 3
    assert poly_eval(p, F(0)) == 3
    assert poly_eval(p, F(1)) == -6
    shifted = poly_shift(p, F(2))
    # p(x+2) = x^3 + 5x^2 - x - 11
    assert shifted == (F(-11), F(-1), F(5), F(1))


def test_is_largest_root():
    # Perron root 4 of the complement of the 7-cycle
    from wheelfree.graphs import complement
    from wheelfree.search import _exact_matrix
    f = complement(cycle(7))
    p = char_poly_exact(_exact_matrix(f, "adjacency"))
    assert is_largest_root(p, F(4))
    assert not is_largest_root(p, F(3))
    assert not is_largest_root(p, F(5))


def test_quotient_eigenvalue_agreement():
    # every quotient eigenvalue appears in the host spectrum
    rng = random.Random(34)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 8))
        p = coarsest_equitable(g)
        q = quotient_matrix(g, p)
        q_eigs = quotient_eigenvalues(q, p.sizes())
        host, _ = jacobi_eigensystem(graph_matrix(g, "adjacency"))
        for val in q_eigs:
            assert min(abs(val - h) for h in host) < 1e-8


def test_shares_top_eigenvalue():
    for n in range(4, 21):
        g = h_n(n)
        assert shares_top_eigenvalue(g, coarsest_equitable(g), "adjacency")
        q_graph = join(complete(2), empty(n - 2))
        p = coarsest_equitable(q_graph, "signless_laplacian")
        assert shares_top_eigenvalue(q_graph, p, "signless_laplacian")
    g = cycle(8)
    assert shares_top_eigenvalue(g, Partition(((1 << 8) - 1,)))
    with pytest.raises(PartitionError):
        shares_top_eigenvalue(disjoint_union(complete(2), complete(2)),
                      Partition((0b1111,)))


def test_apex_spider_poly_instantiations():
    cases = [(13, 7, 2), (15, 8, 2), (17, 9, 2), (17, 9, 3), (21, 11, 4),
             (13, 7, 1), (15, 8, 1)]
    for n, d_u, b in cases:
        assert apex_spider_char_poly_check(n, d_u, b)


def test_apex_spider_parameter_errors():
    with pytest.raises(PartitionError):
        apex_spider_char_poly_check(13, 7, 3)  # no leaves left: empty cell
    with pytest.raises(PartitionError):
        apex_spider_char_poly_check(13, 12, 2)  # no outer vertices
    with pytest.raises(PartitionError):
        apex_spider_char_poly_check(13, 7, 0)


def test_legs_only_family():
    for n, d_u in [(13, 7), (17, 9), (21, 11), (15, 7)]:
        assert legs_only_top_below(n, d_u)
    with pytest.raises(PartitionError):
        legs_only_top_below(13, 8)  # even apex degree


def test_quotient_subset_small_orders(warm_small_enumeration):
    for n in range(1, 7):
        for g in enumerate_graphs(GeneratorConfig(n, "all")):
            p = coarsest_equitable(g)
            q = quotient_matrix(g, p)
            q_eigs = quotient_eigenvalues(q, p.sizes())
            host, _ = jacobi_eigensystem(graph_matrix(g, "adjacency"))
            for val in q_eigs:
                assert min(abs(val - h) for h in host) < 1e-8


def test_char_poly_float_consistency():
    rng = random.Random(35)
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 8))
        p = coarsest_equitable(g)
        q = quotient_matrix(g, p)
        coeffs = char_poly(q)
        top = float(quotient_eigenvalues(q, p.sizes())[0])
        value = sum(float(c) * top ** k for k, c in enumerate(coeffs))
        assert abs(value) < 1e-6
