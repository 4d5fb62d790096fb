"""Generators for graph families and product constructions.

Vertex numbering is part of the contract:

* ``path(n)``: ``0 - 1 - ... - n-1``; ``cycle(n)`` adds ``n-1 ~ 0``.
* ``star(k)``: centre ``0``, leaves ``1..k`` (so ``K_{1,k}`` has ``k+1`` vertices).
* ``wheel(n)``: rim cycle ``0..n-2``, hub ``n-1``.
* ``fan(n)``: path ``0..n-1``, hub ``n`` (``K_1 + P_n``).
* ``friendship(n)``: block ``i`` is ``(2i, 2i+1)``, common vertex ``2n``.
* ``c_gadget(n)``: cycle ``0..4n-1`` (vertex ``i`` is the 1-indexed ``v_{i+1}``),
  pendant ``4n`` on ``0`` and pendant ``4n+1`` on ``2n``.
* ``grid(p, q)``: vertex ``(i, j)`` is ``i*q + j``.
* ``hamming``/``johnson``: tuples / sorted subsets in lexicographic order.
* ``join``, ``corona``: vertices of the left graph first; the corona then
  lists the copy attached to left vertex 0, then 1, and so on.
* ``composition(G, H)``: ``(u, v)`` is ``u*|V(H)| + v``.
* ``double_graph(H)``: ``u_i`` becomes ``2i`` and ``2i+1``.
* ``spider(m, k)``: centre ``0`` then each leg outward, shortest leg first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .errors import CapExceeded, GraphError
from .graph import Graph, from_edge_list

SIZE_CAP = 200


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def _cap(n: int, what: str) -> None:
    if n > SIZE_CAP:
        raise CapExceeded(f"{what} would have {n} vertices, above the cap of {SIZE_CAP}")


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    _cap(n, "path")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    _cap(n, "cycle")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    _cap(n, "complete graph")
    return from_edge_list(n, combinations(range(n), 2), f"K{n}")


def null(n: int) -> Graph:
    _need(n >= 1, "null graph needs n >= 1")
    _cap(n, "null graph")
    return from_edge_list(n, [], f"N{n}")


def star(k: int) -> Graph:
    _need(k >= 1, "star needs at least one leaf")
    _cap(k + 1, "star")
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)], f"K1,{k}")


def complete_multipartite(*sizes: int) -> Graph:
    _need(len(sizes) >= 1 and all(s >= 1 for s in sizes), "part sizes must be positive")
    _cap(sum(sizes), "complete multipartite graph")
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    edges = [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]]
    return from_edge_list(n, edges, "K" + ",".join(map(str, sizes)))


def complete_minus_edge(n: int) -> Graph:
    _need(n >= 2, "K_n - e needs n >= 2")
    _cap(n, "K_n - e")
    return from_edge_list(n, [e for e in combinations(range(n), 2) if e != (0, 1)], f"K{n}-e")


def complete_minus_perfect_matching(n: int) -> Graph:
    _need(n >= 2 and n % 2 == 0, "K_n - M needs an even n >= 2")
    _cap(n, "K_n - M")
    edges = [(u, v) for u, v in combinations(range(n), 2) if not (u % 2 == 0 and v == u + 1)]
    return from_edge_list(n, edges, f"K{n}-M")


def wheel(n: int) -> Graph:
    _need(n >= 5, "wheel needs n >= 5 vertices (rim of length n-1 >= 4)")
    _cap(n, "wheel")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)]
    return from_edge_list(n, edges, f"W{n}")


def fan(n: int) -> Graph:
    _need(n >= 1, "fan needs a path of at least one vertex")
    _cap(n + 1, "fan")
    edges = [(i, i + 1) for i in range(n - 1)] + [(i, n) for i in range(n)]
    return from_edge_list(n + 1, edges, f"F1,{n}")


def friendship(n: int) -> Graph:
    _need(n >= 1, "friendship graph needs n >= 1 blocks")
    _cap(2 * n + 1, "friendship graph")
    c = 2 * n
    edges = []
    for i in range(n):
        a, b = 2 * i, 2 * i + 1
        edges += [(a, b), (a, c), (b, c)]
    return from_edge_list(2 * n + 1, edges, f"Fr{n}")


def c_gadget(n: int) -> Graph:
    """``C_{4n}`` with one pendant on ``v_1`` and one on ``v_{2n+1}``."""
    _need(n >= 2, "the gadget needs n >= 2")
    _cap(4 * n + 2, "gadget")
    m = 4 * n
    edges = [(i, (i + 1) % m) for i in range(m)] + [(0, m), (2 * n, m + 1)]
    return from_edge_list(m + 2, edges, f"Cgadget{n}")


def grid(p: int, q: int) -> Graph:
    _need(p >= 1 and q >= 1, "grid sides must be positive")
    _cap(p * q, "grid")
    edges = []
    for i in range(p):
        for j in range(q):
            v = i * q + j
            if j + 1 < q:
                edges.append((v, v + 1))
            if i + 1 < p:
                edges.append((v, v + q))
    return from_edge_list(p * q, edges, f"P{p}xP{q}")


def hamming(n: int, k: int) -> Graph:
    """``H(n, k)``: words of length ``n`` over ``k`` letters, adjacent when
    they differ in exactly one position."""
    _need(n >= 1 and k >= 2, "hamming needs n >= 1 and k >= 2")
    _cap(k ** n, "hamming graph")
    words = list(product(range(k), repeat=n))
    index = {w: i for i, w in enumerate(words)}
    edges = []
    for w in words:
        for pos in range(n):
            for a in range(w[pos] + 1, k):
                other = w[:pos] + (a,) + w[pos + 1:]
                edges.append((index[w], index[other]))
    return from_edge_list(len(words), edges, f"H{n},{k}")


def johnson(n: int, k: int) -> Graph:
    """``J(n, k)``: ``k``-subsets of ``n`` points, adjacent when they share ``k-1``."""
    _need(1 <= k < n, "johnson needs 1 <= k < n")
    _cap(comb(n, k), "johnson graph")
    subsets = list(combinations(range(n), k))
    sets = [frozenset(s) for s in subsets]
    edges = [(i, j) for i, j in combinations(range(len(sets)), 2) if len(sets[i] & sets[j]) == k - 1]
    return from_edge_list(len(sets), edges, f"J{n},{k}")


def disjoint_union(G: Graph, H: Graph) -> Graph:
    off = G.n
    edges = list(G.edges) + [(u + off, v + off) for u, v in H.edges]
    return from_edge_list(G.n + H.n, edges, f"({G.name})u({H.name})")


def join(G: Graph, H: Graph) -> Graph:
    off = G.n
    _cap(G.n + H.n, "join")
    edges = list(G.edges) + [(u + off, v + off) for u, v in H.edges]
    edges += [(u, off + v) for u in range(G.n) for v in range(H.n)]
    return from_edge_list(G.n + H.n, edges, f"({G.name})+({H.name})")


def corona(G: Graph, H: Graph) -> Graph:
    """``G`` with a private copy of ``H`` joined to each of its vertices."""
    m, n = G.n, H.n
    _cap(m + m * n, "corona")
    edges = list(G.edges)
    for u in range(m):
        off = m + u * n
        edges += [(off + a, off + b) for a, b in H.edges]
        edges += [(u, off + v) for v in range(n)]
    return from_edge_list(m + m * n, edges, f"({G.name})o({H.name})")


def composition(G: Graph, H: Graph) -> Graph:
    """Lexicographic product ``G[H]``."""
    if not G.is_connected():
        raise GraphError("composition needs a connected left factor; "
                         "for a disconnected G take the union of G_i[H] over its components")
    m, n = G.n, H.n
    _cap(m * n, "composition")
    edges = []
    for u in range(m):
        edges += [(u * n + a, u * n + b) for a, b in H.edges]
    for u, x in G.edges:
        edges += [(u * n + a, x * n + b) for a in range(n) for b in range(n)]
    return from_edge_list(m * n, edges, f"({G.name})[({H.name})]")


@dataclass(frozen=True)
class Fiber:
    kind: str  # "null" or "complete"
    size: int

    def __post_init__(self):
        if self.kind not in ("null", "complete"):
            raise GraphError(f"fiber kind must be 'null' or 'complete', got {self.kind!r}")
        if self.size < 1:
            raise GraphError("fiber size must be at least 1")


@dataclass(frozen=True)
class GeneralizedLexicoSpec:
    base: Graph
    fibers: tuple

    def __post_init__(self):
        if len(self.fibers) != self.base.n:
            raise GraphError("need one fiber per base vertex")


def generalized_lexicographic(lex: GeneralizedLexicoSpec) -> Graph:
    """Blow up each base vertex ``v`` into its fiber; fibers of adjacent
    base vertices are completely joined.  Fibers are laid out in base order."""
    H = lex.base
    offsets = []
    total = 0
    for f in lex.fibers:
        offsets.append(total)
        total += f.size
    _cap(total, "generalized lexicographic product")
    edges = []
    for v, f in enumerate(lex.fibers):
        if f.kind == "complete":
            edges += [(offsets[v] + a, offsets[v] + b) for a, b in combinations(range(f.size), 2)]
    for u, v in H.edges:
        edges += [(offsets[u] + a, offsets[v] + b)
                  for a in range(lex.fibers[u].size) for b in range(lex.fibers[v].size)]
    return from_edge_list(total, edges, f"({H.name})[I]")


def double_graph(H: Graph) -> Graph:
    """Replace each vertex by a non-adjacent twin pair joined across ``H``'s edges."""
    if not H.is_connected():
        raise GraphError("double_graph needs a connected graph")
    edges = [(2 * u + s, 2 * v + t) for u, v in H.edges for s in (0, 1) for t in (0, 1)]
    return from_edge_list(2 * H.n, edges, f"D({H.name})")


def tree_with_fixf(n: int, k: int) -> Graph:
    """Order-``n`` tree whose fractional fixing number is ``k/2``: a path
    ``0..n-k-1`` with ``k`` leaves hanging from its last vertex."""
    if k == n - 2:
        raise GraphError("k = n-2 is excluded (the construction would be a star with k+1 twin leaves)")
    if not (2 <= k <= n - 3 or (k == n - 1 and n >= 3)):
        raise GraphError(f"need 2 <= k <= n-3 or k = n-1, got n={n}, k={k}")
    p = n - k
    edges = [(i, i + 1) for i in range(p - 1)] + [(p - 1, p + j) for j in range(k)]
    return from_edge_list(n, edges, f"T{n},{k}")


def spider(m: int, k: int) -> Graph:
    """Centre joined to legs with ``m, m+1, ..., m+k-1`` vertices.

    Rigid when ``k >= 3``; ``spider(m, 2)`` is the path ``P_{2m+2}``.
    """
    _need(m >= 1 and k >= 2, "spider needs m >= 1 and k >= 2")
    _cap(1 + k * m + k * (k - 1) // 2, "spider")
    edges = []
    nxt = 1
    for leg in range(k):
        prev = 0
        for _ in range(m + leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edge_list(nxt, edges, f"S{m},{k}")


def paw() -> Graph:
    """Triangle ``0 1 2`` with a pendant ``3`` on ``0``."""
    return from_edge_list(4, [(0, 1), (1, 2), (0, 2), (0, 3)], "paw")


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    _need(n >= 1 and 0 <= p <= 1, "need n >= 1 and 0 <= p <= 1")
    _cap(n, "random graph")
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return from_edge_list(n, edges, f"G({n},{p},{seed})")


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree from a random Pruefer sequence."""
    _need(n >= 1, "tree needs n >= 1")
    _cap(n, "random tree")
    if n == 1:
        return from_edge_list(1, [], "T1")
    if n == 2:
        return from_edge_list(2, [(0, 1)], "T2")
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return from_edge_list(n, edges, f"tree({n},{seed})")


# name -> (constructor, number of integer parameters or None for variadic)
FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "null": (null, 1),
    "star": (star, 1),
    "multipartite": (complete_multipartite, None),
    "complete-minus-edge": (complete_minus_edge, 1),
    "complete-minus-matching": (complete_minus_perfect_matching, 1),
    "wheel": (wheel, 1),
    "fan": (fan, 1),
    "friendship": (friendship, 1),
    "c-gadget": (c_gadget, 1),
    "grid": (grid, 2),
    "hamming": (hamming, 2),
    "johnson": (johnson, 2),
    "tree-fixf": (tree_with_fixf, 2),
    "spider": (spider, 2),
    "paw": (paw, 0),
    "random": (erdos_renyi, None),
    "random-tree": (random_tree, 2),
}

# products taking graph files
BINARY = {"join": join, "corona": corona, "composition": composition, "union": disjoint_union}
UNARY = {"double": double_graph}
