"""Immutable simple graphs, distances, twins and vertex deletion.

Vertices are the integers ``0..n-1``.  Adjacency is kept twice: as frozensets
for iteration and as integer bit rows for O(1) membership and fast set
algebra.
"""

from __future__ import annotations

import json
from collections import deque
from functools import cached_property
from typing import Iterable

from .errors import GraphError

UNREACHABLE = -1


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``."""

    def __init__(self, n: int, adj, name: str | None = None):
        self.n = n
        self.adj = tuple(frozenset(a) for a in adj)
        self.rows = tuple(sum(1 << w for w in a) for a in self.adj)
        self.name = name

    # construction -------------------------------------------------------

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable, name: str | None = None) -> "Graph":
        if n < 1:
            raise GraphError(f"a graph needs at least one vertex, got n={n}")
        adj = [set() for _ in range(n)]
        for e in edges:
            i, j = (int(x) for x in e)
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge ({i},{j}) has an index outside 0..{n - 1}")
            if i == j:
                raise GraphError(f"self-loop at vertex {i} is not allowed")
            adj[i].add(j)
            adj[j].add(i)
        return cls(n, adj, name)

    # basic queries -------------------------------------------------------

    @cached_property
    def edges(self) -> tuple:
        return tuple((i, j) for i in range(self.n) for j in sorted(self.adj[i]) if i < j)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.rows[u] >> v) & 1 == 1

    @cached_property
    def dist(self) -> tuple:
        return distance_matrix(self)

    @cached_property
    def components(self) -> tuple:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) == 1

    def induced(self, vertices) -> "Graph":
        """Induced subgraph on ``vertices``, relabelled in the given order."""
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        edges = [(index[u], index[w]) for u in vs for w in self.adj[u] if w in index and index[u] < index[w]]
        return Graph.from_edge_list(len(vs), edges)

    def relabel(self, perm) -> "Graph":
        """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
        return Graph.from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges], self.name)

    def with_name(self, name: str | None) -> "Graph":
        return Graph(self.n, self.adj, name)

    # identity ------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"

    # serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        d = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.name is not None:
            d["name"] = self.name
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_edge_list_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{i} {j}" for i, j in self.edges)
        return "\n".join(lines) + "\n"


def from_edge_list(n: int, edges, name: str | None = None) -> Graph:
    return Graph.from_edge_list(n, edges, name)


def parse_graph(text: str) -> Graph:
    """Parse either the JSON graph format or the ``n m`` edge-list format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
            return Graph.from_edge_list(data["n"], data["edges"], data.get("name"))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise GraphError(f"bad graph JSON: {exc}") from exc
    tokens = stripped.split()
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphError(f"bad edge-list text: {exc}") from exc
    if len(nums) < 2:
        raise GraphError("edge-list text needs a header line 'n m'")
    n, m = nums[0], nums[1]
    body = nums[2:]
    if len(body) != 2 * m:
        raise GraphError(f"header announces {m} edges but {len(body) / 2:g} were given")
    return Graph.from_edge_list(n, zip(body[0::2], body[1::2]))


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(graph: Graph, path, fmt: str = "json") -> None:
    text = graph.to_json() + "\n" if fmt == "json" else graph.to_edge_list_text()
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def distance_matrix(G: Graph) -> tuple:
    """All-pairs BFS hop counts; :data:`UNREACHABLE` across components."""
    rows = []
    for s in range(G.n):
        d = [UNREACHABLE] * G.n
        d[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if d[w] == UNREACHABLE:
                    d[w] = d[u] + 1
                    queue.append(w)
        rows.append(tuple(d))
    return tuple(rows)


def are_twins(G: Graph, u: int, v: int) -> bool:
    """True iff ``d(u, w) == d(v, w)`` for every ``w`` other than ``u`` and ``v``."""
    if u == v:
        raise GraphError("twin test needs two distinct vertices")
    du, dv = G.dist[u], G.dist[v]
    return all(du[w] == dv[w] for w in range(G.n) if w != u and w != v)


def twin_partition(G: Graph) -> list:
    """Classes of the relation "equal or twins", each as a sorted tuple.

    Classes are ordered by their smallest vertex.  Raises ``AssertionError``
    if the relation fails to be transitive or a class is neither complete
    nor independent; both would mean a bug rather than bad input.
    """
    cls_of = [-1] * G.n
    classes = []
    for v in range(G.n):
        if cls_of[v] != -1:
            continue
        members = [v] + [w for w in range(v + 1, G.n) if cls_of[w] == -1 and are_twins(G, v, w)]
        for w in members:
            cls_of[w] = len(classes)
        classes.append(tuple(members))
    for c in classes:
        for i, a in enumerate(c):
            for b in c[i + 1:]:
                assert are_twins(G, a, b), f"twin relation not transitive on {c}"
        if len(c) >= 2:
            inside = sum(1 for i, a in enumerate(c) for b in c[i + 1:] if G.has_edge(a, b))
            assert inside in (0, len(c) * (len(c) - 1) // 2), f"twin class {c} is neither null nor complete"
    return classes


def delete_vertex(G: Graph, v: int):
    """Remove ``v``.  Returns ``(graph, labels)`` where ``labels[i]`` is the
    original index of the new vertex ``i``."""
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} out of range")
    if G.n == 1:
        raise GraphError("deleting the only vertex would leave an empty graph")
    labels = tuple(w for w in range(G.n) if w != v)
    return G.induced(labels), labels
