"""Automorphism groups of graphs.

``automorphisms`` walks an individualization-refinement search tree over
equitable colourings.  The first root-to-leaf path fixes a base; for every
level, from the deepest upwards, it looks for automorphisms that map the base
point to each candidate of its cell not yet known to be in the same orbit.
The generators found form a strong generating set for that base, which then
seeds :func:`fixnum.perm.schreier_sims` to get transversals and the order.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .errors import CapExceeded
from .graph import Graph
from .perm import PermGroup, orbit_labels, schreier_sims, transposition, trivial_group

BRUTE_FORCE_CAP = 20


def refine(G: Graph, colors):
    """Colour refinement to the coarsest equitable colouring finer than ``colors``.

    Colours are ranks ``0..k-1``; new colours are ranks of (old colour,
    sorted neighbour colours), so the result depends only on the colouring,
    never on vertex labels.  Returns ``(colors, trace)`` where ``trace`` is a
    hashable record of the refinement rounds.
    """
    colors = list(colors)
    k = len(set(colors))
    trace = []
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in G.adj[v]))) for v in range(G.n)]
        distinct = sorted(set(sigs))
        if len(distinct) == k:
            trace.append(hash(tuple(distinct)))
            return colors, tuple(trace)
        rank = {s: i for i, s in enumerate(distinct)}
        colors = [rank[s] for s in sigs]
        k = len(distinct)
        trace.append(hash(tuple(distinct)))


def individualize(colors, v: int):
    """Split ``v`` off its colour class, placing it first."""
    keys = [(c, 0 if w == v else 1) for w, c in enumerate(colors)]
    rank = {s: i for i, s in enumerate(sorted(set(keys)))}
    return [rank[s] for s in keys]


def _target_color(colors):
    """First colour class with more than one vertex, or ``None`` if discrete."""
    counts = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    for c in sorted(counts):
        if counts[c] > 1:
            return c
    return None


def is_automorphism(G: Graph, p) -> bool:
    return all(G.rows[p[u]] == sum(1 << p[w] for w in G.adj[u]) for u in range(G.n))


class _Search:
    def __init__(self, G: Graph):
        self.G = G
        # first path: list of (colors, trace, target colour, base point)
        self.path = []
        colors, trace = refine(G, [0] * G.n)
        while True:
            t = _target_color(colors)
            self.path.append((colors, trace, t))
            if t is None:
                break
            b = min(v for v in range(G.n) if colors[v] == t)
            colors, trace = refine(G, individualize(colors, b))
        self.leaf = self.path[-1][0]
        self.base = [min(v for v in range(G.n) if cols[v] == t) for cols, _, t in self.path[:-1]]

    def _leaf_perm(self, colors):
        where = [0] * self.G.n
        for v, c in enumerate(colors):
            where[c] = v
        return tuple(where[c] for c in self.leaf)

    def find(self, level: int, colors):
        """Search below a node at ``level`` for an automorphism matching the first path."""
        ref_colors, ref_trace, t = self.path[level]
        if t is None:
            p = self._leaf_perm(colors)
            return p if is_automorphism(self.G, p) else None
        cell = [v for v in range(self.G.n) if colors[v] == t]
        for c in cell:
            child, trace = refine(self.G, individualize(colors, c))
            if trace != self.path[level + 1][1]:
                continue
            found = self.find(level + 1, child)
            if found is not None:
                return found
        return None

    def generators(self):
        G = self.G
        gens = []
        for level in range(len(self.base) - 1, -1, -1):
            colors, _, t = self.path[level]
            b = self.base[level]
            labels = orbit_labels(gens, G.n) if gens else list(range(G.n))
            for c in (v for v in range(G.n) if colors[v] == t):
                if labels[c] == labels[b]:
                    continue
                child, trace = refine(G, individualize(colors, c))
                if trace != self.path[level + 1][1]:
                    continue
                p = self.find(level + 1, child)
                if p is not None:
                    gens.append(p)
                    labels = orbit_labels(gens, G.n)
        return gens


@lru_cache(maxsize=512)
def automorphisms(G: Graph) -> PermGroup:
    """The full automorphism group of ``G`` as a stabilizer chain."""
    search = _Search(G)
    gens = search.generators()
    if not gens:
        return trivial_group(G.n)
    group = schreier_sims(gens, G.n, base_prefix=search.base)
    for g in group.strong_generators:
        assert is_automorphism(G, g)
    return group


def brute_force_automorphisms(G: Graph, cap: int = BRUTE_FORCE_CAP) -> list:
    """Every automorphism of ``G``, by backtracking over vertex images.

    Candidates for ``v`` must match its degree and its sorted distance
    profile, and adjacency to already-mapped vertices is checked as the
    assignment grows.  Independent of the refinement machinery.
    """
    n = G.n
    if n > cap:
        raise CapExceeded(f"brute-force automorphism search is capped at n={cap}, got n={n}")
    profile = [tuple(sorted(G.dist[v])) for v in range(n)]
    cands = [[w for w in range(n) if profile[w] == profile[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: (len(cands[v]), v))
    image = [-1] * n
    used = [False] * n
    out = []

    def rec(i):
        if i == n:
            out.append(tuple(image))
            return
        v = order[i]
        for w in cands[v]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if G.has_edge(u, v) != G.has_edge(image[u], w):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            rec(i + 1)
            used[w] = False
            image[v] = -1

    rec(0)
    return sorted(out)


def naive_automorphisms(G: Graph) -> list:
    """All permutations of ``V`` checked one by one.  Tiny graphs only."""
    if G.n > 9:
        raise CapExceeded("naive enumeration is limited to n <= 9")
    return sorted(p for p in permutations(range(G.n)) if is_automorphism(G, p))


def orbit(group: PermGroup, u: int) -> frozenset:
    return group.orbit(u)


def point_stabilizer(group: PermGroup, x: int) -> PermGroup:
    stab = group.point_stabilizer(x)
    assert group.order == stab.order * len(group.orbit(x))
    return stab


def pointwise_stabilizer(group: PermGroup, S) -> PermGroup:
    return group.pointwise_stabilizer(sorted(S))


def stabilizer_orbit(group: PermGroup, x: int, u: int) -> frozenset:
    return group.point_stabilizer(x).orbit(u)


def is_vertex_transitive(G: Graph) -> bool:
    return len(automorphisms(G).orbit(0)) == G.n


def twin_transposition_in_group(G: Graph, u: int, v: int) -> bool:
    return transposition(G.n, u, v) in automorphisms(G)


@lru_cache(maxsize=512)
def stabilizer_orbit_labels(G: Graph) -> tuple:
    """For every ``x``, labels of the orbits of the stabilizer of ``x``.

    ``result[x][u] == result[x][v]`` iff some automorphism fixing ``x`` maps
    ``u`` to ``v``.  Only one stabilizer per orbit is computed; the others
    are conjugates, transported with coset representatives.
    """
    group = automorphisms(G)
    n = G.n
    out = [None] * n
    if group.is_trivial():
        ident = tuple(range(n))
        return tuple(ident for _ in range(n))
    for orb in group.orbits():
        r = orb[0]
        chain = schreier_sims(group.strong_generators, n, base_prefix=[r], known_order=group.order)
        stab = chain.tail(1)
        base_labels = orbit_labels(stab.strong_generators, n) if not stab.is_trivial() else list(range(n))
        for x, u in chain.transversals[0].items():
            # u maps r to x; orbits of the stabilizer of x are images under u
            lab = [0] * n
            for v in range(n):
                lab[u[v]] = u[base_labels[v]]
            out[x] = tuple(lab)
    return tuple(out)
