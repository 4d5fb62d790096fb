from math import comb

import pytest

from fixnum import families as F
from fixnum.errors import CapExceeded, GraphError
from fixnum.graph import are_twins


@pytest.mark.parametrize("G, n, m", [
    (F.path(5), 5, 4), (F.cycle(6), 6, 6), (F.complete(5), 5, 10), (F.null(3), 3, 0),
    (F.star(3), 4, 3), (F.complete_multipartite(2, 2, 3), 7, 16), (F.complete_minus_edge(5), 5, 9),
    (F.complete_minus_perfect_matching(6), 6, 12), (F.wheel(6), 6, 10), (F.fan(4), 5, 7),
    (F.friendship(3), 7, 9), (F.c_gadget(2), 10, 10), (F.grid(2, 3), 6, 7),
    (F.hamming(2, 3), 9, 18), (F.hamming(3, 2), 8, 12), (F.johnson(5, 2), 10, 30),
    (F.johnson(8, 4), 70, 70 * 16 // 2), (F.spider(1, 3), 7, 6), (F.paw(), 4, 4),
], ids=lambda x: x.name if hasattr(x, "name") else str(x))
def test_sizes(G, n, m):
    assert (G.n, G.m) == (n, m)


def test_numbering_conventions():
    assert F.wheel(6).degree(5) == 5
    assert F.fan(4).degree(4) == 4
    assert F.friendship(2).degree(4) == 4 and F.friendship(2).has_edge(0, 1)
    g = F.c_gadget(2)
    assert g.has_edge(8, 0) and g.has_edge(9, 4)
    assert not F.complete_minus_edge(4).has_edge(0, 1)


def test_products():
    P3, K2 = F.path(3), F.complete(2)
    assert F.corona(P3, K2).n == 9
    assert F.join(P3, K2).m == 2 + 1 + 6
    assert F.disjoint_union(P3, K2).m == 3
    comp = F.composition(P3, K2)
    assert comp.n == 6 and comp.m == 2 * 4 + 3 * 1
    with pytest.raises(GraphError):
        F.composition(F.null(2), K2)


def test_generalized_lexicographic():
    lex = F.GeneralizedLexicoSpec(F.path(2), (F.Fiber("null", 2), F.Fiber("complete", 3)))
    G = F.generalized_lexicographic(lex)
    assert G.n == 5 and G.m == 6 + 3
    assert are_twins(G, 0, 1) and are_twins(G, 2, 4)
    with pytest.raises(GraphError):
        F.Fiber("cycle", 2)
    with pytest.raises(GraphError):
        F.GeneralizedLexicoSpec(F.path(2), (F.Fiber("null", 2),))


def test_double_graph_contains_h():
    H = F.cycle(5)
    D = F.double_graph(H)
    assert D.n == 10
    assert D.induced([0, 2, 4, 6, 8]) == H
    assert are_twins(D, 0, 1) and not D.has_edge(0, 1)


def test_tree_with_fixf():
    T = F.tree_with_fixf(7, 2)
    assert T.n == 7 and T.m == 6 and T.is_connected()
    with pytest.raises(GraphError):
        F.tree_with_fixf(6, 4)


def test_random_tree_is_tree():
    for seed in range(20):
        T = F.random_tree(9, seed)
        assert T.m == 8 and T.is_connected()


def test_johnson_degree():
    assert all(F.johnson(6, 3).degree(v) == 3 * 3 for v in range(comb(6, 3)))


def test_size_cap():
    with pytest.raises(CapExceeded):
        F.complete(500)
    with pytest.raises(GraphError):
        F.wheel(4)
