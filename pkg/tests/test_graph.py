import json

import pytest

from fixnum import families as F
from fixnum.errors import GraphError
from fixnum.graph import (
    UNREACHABLE,
    Graph,
    are_twins,
    delete_vertex,
    distance_matrix,
    from_edge_list,
    parse_graph,
    read_graph,
    twin_partition,
    write_graph,
)


def test_edge_list_construction():
    G = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (1, 0)])
    assert G.m == 3
    assert G.edges == ((0, 1), (1, 2), (2, 3))
    assert G.degree(1) == 2 and G.has_edge(2, 1) and not G.has_edge(0, 3)


@pytest.mark.parametrize("n, edges", [(0, []), (3, [(0, 3)]), (3, [(1, 1)]), (2, [(-1, 0)])])
def test_bad_input_rejected(n, edges):
    with pytest.raises(GraphError):
        from_edge_list(n, edges)


def test_distances_path_and_disconnected():
    assert distance_matrix(F.path(4))[0] == (0, 1, 2, 3)
    G = from_edge_list(3, [(0, 1)])
    assert G.dist[0][2] == UNREACHABLE
    assert not G.is_connected()
    assert sorted(sorted(c) for c in G.components) == [[0, 1], [2]]


def test_twins_in_k3_and_p3():
    K3 = F.complete(3)
    assert all(are_twins(K3, u, v) for u in range(3) for v in range(3) if u != v)
    P3 = F.path(3)
    assert are_twins(P3, 0, 2) and not are_twins(P3, 0, 1)
    with pytest.raises(GraphError):
        are_twins(P3, 1, 1)


def test_twin_partition_examples():
    assert twin_partition(F.complete(3)) == [(0, 1, 2)]
    assert twin_partition(F.path(3)) == [(0, 2), (1,)]
    assert twin_partition(F.cycle(5)) == [(i,) for i in range(5)]
    # K_{2,2,3}: each part is a class of non-adjacent twins
    assert twin_partition(F.complete_multipartite(2, 2, 3)) == [(0, 1), (2, 3), (4, 5, 6)]


def test_delete_vertex_relabels():
    H, labels = delete_vertex(F.path(4), 1)
    assert labels == (0, 2, 3)
    assert H.n == 3 and H.edges == ((1, 2),)
    with pytest.raises(GraphError):
        delete_vertex(F.complete(1), 0)


def test_json_round_trip(tmp_path):
    G = F.johnson(5, 2)
    p = tmp_path / "j.json"
    write_graph(G, p)
    text = p.read_text()
    H = read_graph(p)
    assert H == G and H.name == G.name
    assert H.to_json() + "\n" == text
    assert json.loads(text)["n"] == 10


def test_edge_list_text_round_trip(tmp_path):
    G = F.grid(3, 3)
    p = tmp_path / "g.txt"
    write_graph(G, p, "text")
    assert p.read_text().splitlines()[0] == f"{G.n} {G.m}"
    assert read_graph(p) == G


def test_parse_errors():
    for bad in ["{not json", '{"n": 2}', "3 2\n0 1\n", "x y"]:
        with pytest.raises(GraphError):
            parse_graph(bad)


def test_equality_ignores_name():
    a = from_edge_list(2, [(0, 1)], "a")
    b = from_edge_list(2, [(1, 0)], "b")
    assert a == b and hash(a) == hash(b)
    assert a != from_edge_list(3, [(0, 1)])
