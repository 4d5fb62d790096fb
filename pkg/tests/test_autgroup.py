from math import factorial

import pytest

from fixnum import families as F
from fixnum.autgroup import (
    automorphisms,
    brute_force_automorphisms,
    is_automorphism,
    is_vertex_transitive,
    naive_automorphisms,
    refine,
    stabilizer_orbit,
    twin_transposition_in_group,
)
from fixnum.errors import CapExceeded
from fixnum.graph import are_twins
from oracles import nx_automorphisms

KNOWN_ORDERS = [
    (F.complete(6), factorial(6)),
    (F.cycle(8), 16),
    (F.path(5), 2),
    (F.hamming(2, 3), 72),
    (F.hamming(3, 2), 48),
    (F.johnson(5, 2), 120),
    (F.johnson(8, 4), factorial(8) * 2),
    (F.wheel(6), 10),
    (F.wheel(5), 8),
    (F.spider(1, 3), 1),
    (F.c_gadget(2), 4),
    (F.friendship(3), 48),
    (F.grid(3, 4), 4),
    (F.complete_multipartite(2, 2, 3), 2 * 2 * 6 * 2),
]


@pytest.mark.parametrize("G, order", KNOWN_ORDERS, ids=[g.name for g, _ in KNOWN_ORDERS])
def test_group_orders(G, order):
    grp = automorphisms(G)
    assert grp.order == order
    assert all(is_automorphism(G, g) for g in grp.strong_generators)


@pytest.mark.parametrize("seed", range(12))
def test_matches_networkx(seed):
    G = F.erdos_renyi(7, 0.45, seed)
    grp = automorphisms(G)
    expected = nx_automorphisms(G)
    assert sorted(grp.elements()) == expected
    assert brute_force_automorphisms(G) == expected


def test_naive_agrees_on_small_graphs():
    for G in (F.path(4), F.cycle(5), F.paw()):
        assert naive_automorphisms(G) == nx_automorphisms(G)


def test_brute_force_cap():
    with pytest.raises(CapExceeded):
        brute_force_automorphisms(F.path(25))


def test_refinement_is_equitable_on_path():
    colors, _ = refine(F.path(5), [0] * 5)
    assert colors[0] == colors[4] and colors[1] == colors[3]
    assert len({colors[0], colors[1], colors[2]}) == 3


def test_stabilizer_orbits_on_c6():
    grp = automorphisms(F.cycle(6))
    assert stabilizer_orbit(grp, 0, 1) == frozenset({1, 5})
    assert stabilizer_orbit(grp, 0, 3) == frozenset({3})


def test_vertex_transitivity():
    assert is_vertex_transitive(F.johnson(5, 2))
    assert not is_vertex_transitive(F.path(4))
    assert not is_vertex_transitive(F.wheel(7))


def test_twins_give_transpositions():
    G = F.complete_multipartite(2, 3)
    for u in range(G.n):
        for v in range(u + 1, G.n):
            assert twin_transposition_in_group(G, u, v) == are_twins(G, u, v)
