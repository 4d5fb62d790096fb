"""Orbit-derived invariants: active pairs, fixing neighbourhoods, the fixed
graph, and the integer fixing parameters fix, fix+ and fxd."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .autgroup import automorphisms, stabilizer_orbit_labels
from .errors import CapExceeded, GraphError, enumeration_cap
from .graph import Graph, are_twins
from .perm import PermGroup

# groups up to this order are enumerated for fast fixing-set tests
ELEMENT_LIMIT = 50_000


def active_and_core(G: Graph):
    """``(A, C)``: vertices in orbits of size at least two, and the fixed rest."""
    group = automorphisms(G)
    active = frozenset(v for orb in group.orbits() if len(orb) > 1 for v in orb)
    return active, frozenset(range(G.n)) - active


@lru_cache(maxsize=512)
def active_pairs(G: Graph) -> tuple:
    """Unordered pairs ``(u, v)``, ``u < v``, of distinct vertices in one orbit."""
    return tuple((orb[i], w) for orb in automorphisms(G).orbits() for i in range(len(orb)) for w in orb[i + 1:])


def _fixing_mask(G: Graph, u: int, v: int) -> int:
    labels = stabilizer_orbit_labels(G)
    mask = 0
    for x in range(G.n):
        if labels[x][u] != labels[x][v]:
            mask |= 1 << x
    return mask


def fixing_neighborhood(G: Graph, u: int, v: int) -> frozenset:
    """Vertices ``x`` whose stabilizer keeps ``u`` and ``v`` in different orbits."""
    if u == v:
        raise GraphError("fixing neighbourhood needs two distinct vertices")
    mask = _fixing_mask(G, u, v)
    return frozenset(x for x in range(G.n) if (mask >> x) & 1)


def fixed_neighborhood(G: Graph, x: int) -> frozenset:
    """Unordered pairs of distinct vertices separated by the stabilizer of ``x``.

    Pairs from different orbits are always separated, so they are included.
    """
    lab = stabilizer_orbit_labels(G)[x]
    return frozenset((u, v) for u in range(G.n) for v in range(u + 1, G.n) if lab[u] != lab[v])


def resolving_neighborhood(G: Graph, u: int, v: int) -> frozenset:
    """Vertices at different distances from ``u`` and ``v``."""
    if u == v:
        raise GraphError("resolving neighbourhood needs two distinct vertices")
    if not G.is_connected():
        raise GraphError("resolving neighbourhoods need a connected graph")
    du, dv = G.dist[u], G.dist[v]
    return frozenset(x for x in range(G.n) if du[x] != dv[x])


@dataclass(frozen=True)
class FixedGraph:
    """Incidence between vertices and active pairs: row ``i`` of the
    matrix marks the fixing neighbourhood of ``pairs[i]``."""

    n: int
    pairs: tuple
    row_masks: tuple

    @property
    def incidence(self) -> list:
        return [[(m >> j) & 1 for j in range(self.n)] for m in self.row_masks]

    @property
    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.row_masks)

    def neighbors_of_vertex(self, x: int) -> list:
        return [p for p, m in zip(self.pairs, self.row_masks) if (m >> x) & 1]

    def to_dict(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs], "incidence": self.incidence}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def matrix_text(self) -> str:
        lines = [f"{len(self.pairs)} {self.n}"]
        lines.extend(" ".join(str(b) for b in row) for row in self.incidence)
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=512)
def fixed_graph(G: Graph) -> FixedGraph:
    pairs = active_pairs(G)
    return FixedGraph(G.n, pairs, tuple(_fixing_mask(G, u, v) for u, v in pairs))


def f_min(G: Graph) -> int:
    """Smallest fixing neighbourhood over active pairs."""
    fg = fixed_graph(G)
    if not fg.pairs:
        raise GraphError("f(G) undefined for rigid graphs")
    return min(bin(m).count("1") for m in fg.row_masks)


def is_fixing_set(G: Graph, S) -> bool:
    return automorphisms(G).pointwise_stabilizer(sorted(set(S))).is_trivial()


def _moved_points(group: PermGroup) -> list:
    return sorted({i for g in group.strong_generators for i, x in enumerate(g) if i != x})


@dataclass(frozen=True)
class FixingNumber:
    value: int
    witness: tuple
    hitting_set_value: int | None = None


def greedy_fixing_set(group: PermGroup) -> list:
    """Repeatedly fix the smallest vertex of a largest orbit."""
    chosen = []
    while not group.is_trivial():
        orbs = group.orbits()
        size = max(len(o) for o in orbs)
        x = min(o[0] for o in orbs if len(o) == size)
        chosen.append(x)
        group = group.pointwise_stabilizer([x])
    return chosen


def _search_fixing_set(group: PermGroup, k: int, chosen: list):
    if group.is_trivial():
        return list(chosen)
    if len(chosen) == k:
        return None
    # one representative per nontrivial orbit; any fixing superset can be
    # moved by the current stabilizer so that it contains the representative
    for orb in group.orbits():
        if len(orb) < 2:
            continue
        found = _search_fixing_set(group.pointwise_stabilizer([orb[0]]), k, chosen + [orb[0]])
        if found is not None:
            return found
    return None


def fixing_number(G: Graph, with_hitting_set: bool = False) -> FixingNumber:
    """Minimum size of a fixing set, with a witness.

    With ``with_hitting_set`` the 0/1 covering optimum over the fixed graph
    is computed too, for comparison (it is a lower bound on fix).
    """
    group = automorphisms(G)
    greedy = greedy_fixing_set(group)
    best = sorted(greedy)
    for k in range(len(greedy)):
        found = _search_fixing_set(group, k, [])
        if found is not None:
            best = sorted(found)
            break
    hit = None
    if with_hitting_set:
        from .lp import CoverLp, integral_cover_optimum
        fg = fixed_graph(G)
        hit = integral_cover_optimum(CoverLp(G.n, fg.row_masks))[0]
    return FixingNumber(len(best), tuple(best), hit)


class _FixingOracle:
    """Memoized test "is this vertex mask a fixing set?"."""

    def __init__(self, G: Graph):
        self.G = G
        self.group = automorphisms(G)
        self.memo = {}
        self.fix_masks = None
        if self.group.order <= ELEMENT_LIMIT:
            masks = set()
            for g in self.group.elements():
                fm = sum(1 << i for i, x in enumerate(g) if i == x)
                if fm != (1 << G.n) - 1:
                    masks.add(fm)
            self.fix_masks = [m for m in masks if not any(m != o and m & o == m for o in masks)]

    def __call__(self, mask: int) -> bool:
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        if self.fix_masks is not None:
            ok = not any(mask & fm == mask for fm in self.fix_masks)
        else:
            pts = [i for i in range(self.G.n) if (mask >> i) & 1]
            ok = self.group.pointwise_stabilizer(pts).is_trivial()
        self.memo[mask] = ok
        return ok


def _check_cap(G: Graph, cap):
    limit = enumeration_cap(cap)
    if G.n > limit:
        raise CapExceeded(f"exhaustive subset enumeration is capped at n={limit}, got n={G.n}")


def minimal_fixing_sets(G: Graph, cap=None):
    """Yield every inclusion-minimal fixing set (as sorted tuples)."""
    _check_cap(G, cap)
    n = G.n
    oracle = _FixingOracle(G)
    group = oracle.group
    if group.is_trivial():
        yield ()
        return

    def rec(chosen, mask, start, grp):
        if grp.is_trivial():
            if all(not oracle(mask & ~(1 << s)) for s in chosen):
                yield tuple(chosen)
            return
        moved = set(_moved_points(grp))
        for x in range(start, n):
            # a vertex fixed by the current stabilizer can never be needed
            if x in moved:
                yield from rec(chosen + [x], mask | (1 << x), x + 1, grp.pointwise_stabilizer([x]))

    yield from rec([], 0, 0, group)


def upper_fixing_number(G: Graph, cap=None):
    """Largest inclusion-minimal fixing set: ``(size, witness)``."""
    best = ()
    for s in minimal_fixing_sets(G, cap):
        if len(s) > len(best):
            best = s
    return len(best), best


def fixed_number(G: Graph, cap=None) -> int:
    """Least ``k`` such that every ``k``-subset of vertices is a fixing set.

    Equals one more than the largest non-fixing set, which is the largest
    set of points fixed by a nontrivial pointwise stabilizer.  The search
    walks stabilizer chains, one branch per orbit representative.
    """
    _check_cap(G, cap)
    group = automorphisms(G)
    if group.is_trivial():
        return 0
    best = [0]

    def fixed_points(grp):
        return G.n - len(_moved_points(grp))

    def rec(grp):
        best[0] = max(best[0], fixed_points(grp))
        for orb in grp.orbits():
            if len(orb) < 2:
                continue
            sub = grp.pointwise_stabilizer([orb[0]])
            if not sub.is_trivial():
                rec(sub)

    rec(group)
    return best[0] + 1


@dataclass(frozen=True)
class EdgeBoundReport:
    l: int
    k: int
    edges: int
    lower: object
    upper: int
    lower_ok: bool
    upper_ok: bool

    @property
    def passed(self) -> bool:
        return self.lower_ok and self.upper_ok

    def to_dict(self) -> dict:
        from .lp import fmt_rational
        return {"l": self.l, "k": self.k, "edges": self.edges, "lower": fmt_rational(self.lower),
                "upper": self.upper, "lower_ok": self.lower_ok, "upper_ok": self.upper_ok}


def edge_bound_values(G: Graph, k: int) -> EdgeBoundReport:
    """Evaluate both edge-count bounds of the fixed graph for a given ``k``."""
    from fractions import Fraction
    active, _ = active_and_core(G)
    l = len(active)
    e = fixed_graph(G).edge_count
    lower = Fraction(l, 2) * (l - k + 1)
    upper = G.n * (G.n * (G.n - 1) // 2 - k + 1)
    return EdgeBoundReport(l, k, e, lower, upper, lower <= e, e <= upper)


def edge_bound_check(G: Graph, cap=None) -> EdgeBoundReport:
    """Edge-count bounds of the fixed graph for a ``k``-fixed graph."""
    fix = fixing_number(G).value
    fxd = fixed_number(G, cap)
    if fix != fxd or fix < 1:
        raise GraphError(f"graph is not k-fixed: fix={fix}, fxd={fxd}")
    return edge_bound_values(G, fix)


def twin_pairs(G: Graph) -> list:
    return [(u, v) for u, v in active_pairs(G) if are_twins(G, u, v)]
