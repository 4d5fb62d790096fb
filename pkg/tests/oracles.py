"""Independent reference computations used only by the tests.

None of these share code with the package: automorphisms come from
networkx's VF2 matcher, LP optima from scipy's HiGHS solver (then snapped
to a small-denominator rational and certified exactly), and stabilizer
orbits from explicit element lists.
"""

from fractions import Fraction
from itertools import combinations

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher
from scipy.optimize import linprog


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


def nx_automorphisms(G):
    H = to_nx(G)
    perms = []
    for m in GraphMatcher(H, H).isomorphisms_iter():
        perms.append(tuple(m[i] for i in range(G.n)))
    return sorted(perms)


def element_fixing_sets_rows(G, elements):
    """Rows of the covering LP built straight from the element list:
    for each pair (u, v) in one orbit, the x whose stabilizer separates them."""
    n = G.n
    orbit = {u: {g[u] for g in elements} for u in range(n)}
    rows = []
    for u, v in combinations(range(n), 2):
        if v not in orbit[u]:
            continue
        row = []
        for x in range(n):
            stab = [g for g in elements if g[x] == x]
            row.append(0 if any(g[u] == v for g in stab) else 1)
        rows.append(row)
    return rows


def resolving_rows(G):
    H = to_nx(G)
    d = dict(nx.all_pairs_shortest_path_length(H))
    return [[1 if d[u][x] != d[v][x] else 0 for x in range(G.n)] for u, v in combinations(range(G.n), 2)]


def cover_lp_value(rows, n, max_den=10_000):
    """Optimum of min 1.x, Ax >= 1, 0 <= x, certified exactly by a dual."""
    if not rows:
        return Fraction(0)
    A = np.array(rows, dtype=float)
    primal = linprog(np.ones(n), A_ub=-A, b_ub=-np.ones(len(rows)), bounds=[(0, None)] * n, method="highs")
    dual = linprog(-np.ones(len(rows)), A_ub=A.T, b_ub=np.ones(n), bounds=[(0, None)] * len(rows), method="highs")
    assert primal.status == 0 and dual.status == 0
    x = [Fraction(v).limit_denominator(max_den) for v in primal.x]
    y = [Fraction(v).limit_denominator(max_den) for v in dual.x]
    for r in rows:
        assert sum(a * xi for a, xi in zip(r, x)) >= 1
    for j in range(n):
        assert sum(rows[i][j] * y[i] for i in range(len(rows))) <= 1
    assert sum(x) == sum(y), "snapped primal and dual disagree"
    return sum(x)


def oracle_fixf(G):
    return cover_lp_value(element_fixing_sets_rows(G, nx_automorphisms(G)), G.n)


def oracle_dimf(G):
    return cover_lp_value(resolving_rows(G), G.n)


def oracle_fixing_number(G):
    elements = nx_automorphisms(G)
    for k in range(G.n + 1):
        for S in combinations(range(G.n), k):
            if sum(1 for g in elements if all(g[s] == s for s in S)) == 1:
                return k
    raise AssertionError("unreachable")
