"""Exact covering LPs: ``min 1.x`` subject to ``Bx >= 1``, ``x >= 0``.

The solver runs a rational simplex on the dual packing problem
``max 1.y`` subject to ``B^T y <= 1``, ``y >= 0``.  Its slack basis is feasible at
the start, so no phase one is needed, and the optimal primal weights are the
objective-row entries under the slack columns.  Every solve is checked
against a primal/dual certificate before it is returned.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceeded, GraphError
from .graph import Graph

ILP_COLUMN_CAP = 30


def fmt_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class CoverLp:
    """Rows of a 0/1 covering matrix over ``ncols`` columns, as bitmasks."""

    ncols: int
    rows: tuple

    @classmethod
    def from_matrix(cls, matrix, ncols: int | None = None) -> "CoverLp":
        matrix = [list(r) for r in matrix]
        if ncols is None:
            ncols = len(matrix[0]) if matrix else 0
        rows = []
        for r in matrix:
            if len(r) != ncols:
                raise ValueError("ragged covering matrix")
            rows.append(sum(1 << j for j, b in enumerate(r) if b))
        return cls(ncols, tuple(rows))

    @classmethod
    def from_sets(cls, sets, ncols: int) -> "CoverLp":
        return cls(ncols, tuple(sum(1 << j for j in s) for s in sets))

    def matrix(self) -> list:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def reduced(self) -> "CoverLp":
        """Drop duplicate rows and rows that contain another row."""
        if any(r == 0 for r in self.rows):
            raise ValueError("covering matrix has an all-zero row; the LP is infeasible")
        uniq = sorted(set(self.rows), key=lambda r: (bin(r).count("1"), r))
        kept = []
        for r in uniq:
            if not any(k & r == k for k in kept):
                kept.append(r)
        return CoverLp(self.ncols, tuple(kept))


@dataclass(frozen=True)
class LpResult:
    value: Fraction
    weights: tuple
    dual: tuple = ()
    pivots: int = 0

    def to_dict(self) -> dict:
        return {"value": fmt_rational(self.value), "weights": [fmt_rational(w) for w in self.weights]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _simplex_packing(rows, ncols):
    """Maximize ``sum y`` s.t. for each column ``j``: ``sum_{i: j in row i} y_i <= 1``.

    Tableau rows correspond to columns of the covering matrix.  Bland's rule
    picks the entering and leaving variables, so degenerate pivots cannot
    cycle.  Returns ``(value, x, y, pivots)``.
    """
    r = len(rows)
    zero, one = Fraction(0), Fraction(1)
    # row j: coefficients as a dict {var: value} (sparse), rhs separate
    T = []
    for j in range(ncols):
        coeffs = {i: one for i in range(r) if (rows[i] >> j) & 1}
        coeffs[r + j] = one
        T.append(coeffs)
    rhs = [one] * ncols
    basis = [r + j for j in range(ncols)]
    obj = {i: -one for i in range(r)}
    obj_val = zero
    pivots = 0
    while True:
        entering = min((v for v, c in obj.items() if c < 0), default=None)
        if entering is None:
            break
        best = None
        for k in range(ncols):
            a = T[k].get(entering)
            if a is not None and a > 0:
                ratio = rhs[k] / a
                key = (ratio, basis[k])
                if best is None or key < best[0]:
                    best = (key, k)
        if best is None:
            raise AssertionError("packing LP reported unbounded; covering LP would be infeasible")
        k = best[1]
        prow = T[k]
        piv = prow[entering]
        if piv != one:
            prow = {v: c / piv for v, c in prow.items()}
            rhs[k] = rhs[k] / piv
            T[k] = prow
        for kk in range(ncols):
            if kk == k:
                continue
            f = T[kk].get(entering)
            if f is None:
                continue
            row = T[kk]
            for v, c in prow.items():
                nv = row.get(v, zero) - f * c
                if nv:
                    row[v] = nv
                else:
                    row.pop(v, None)
            rhs[kk] -= f * rhs[k]
        f = obj.get(entering)
        if f is not None:
            for v, c in prow.items():
                nv = obj.get(v, zero) - f * c
                if nv:
                    obj[v] = nv
                else:
                    obj.pop(v, None)
            obj_val -= f * rhs[k]
        basis[k] = entering
        pivots += 1
    y = [zero] * r
    for k, var in enumerate(basis):
        if var < r:
            y[var] = rhs[k]
    x = [obj.get(r + j, zero) for j in range(ncols)]
    return obj_val, x, y, pivots


def _check_certificate(lp: CoverLp, x, y, value) -> None:
    for row in lp.rows:
        s = sum((x[j] for j in range(lp.ncols) if (row >> j) & 1), Fraction(0))
        if s < 1:
            raise AssertionError("simplex returned an infeasible covering solution")
    if any(w < 0 for w in x) or any(w < 0 for w in y):
        raise AssertionError("simplex returned a negative weight")
    for j in range(lp.ncols):
        s = sum((y[i] for i, row in enumerate(lp.rows) if (row >> j) & 1), Fraction(0))
        if s > 1:
            raise AssertionError("simplex returned an infeasible packing solution")
    if sum(x, Fraction(0)) != value or sum(y, Fraction(0)) != value:
        raise AssertionError("primal and dual objective values disagree")


def solve_cover_lp(lp: CoverLp, reduce: bool = True) -> LpResult:
    """Exact optimum of ``min 1.x`` s.t. ``Bx >= 1, x >= 0``.

    Returned weights are capped at 1; for a 0/1 covering matrix an optimal
    weight never exceeds 1, so the cap is a no-op kept as a safeguard.
    ``dual`` is indexed like ``lp.rows``.
    """
    if not lp.rows:
        return LpResult(Fraction(0), tuple(Fraction(0) for _ in range(lp.ncols)), ())
    work = lp.reduced() if reduce else lp
    if any(r == 0 for r in work.rows):
        raise ValueError("covering matrix has an all-zero row; the LP is infeasible")
    value, x, y_red, pivots = _simplex_packing(work.rows, work.ncols)
    x = [min(w, Fraction(1)) for w in x]
    index = {}
    for i, row in enumerate(work.rows):
        index.setdefault(row, i)
    y = [Fraction(0)] * len(lp.rows)
    seen = set()
    for i, row in enumerate(lp.rows):
        if row in index and row not in seen:
            y[i] = y_red[index[row]]
            seen.add(row)
    _check_certificate(lp, x, y, value)
    return LpResult(value, tuple(x), tuple(y), pivots)


def solve_permuted(lp: CoverLp, seed: int, reduce: bool = True) -> LpResult:
    """Re-solve with rows and columns shuffled; weights mapped back."""
    rng = random.Random(seed)
    rows = list(lp.rows)
    rng.shuffle(rows)
    cols = list(range(lp.ncols))
    rng.shuffle(cols)
    moved = tuple(sum(1 << cols[j] for j in range(lp.ncols) if (r >> j) & 1) for r in rows)
    res = solve_cover_lp(CoverLp(lp.ncols, moved), reduce=reduce)
    weights = tuple(res.weights[cols[j]] for j in range(lp.ncols))
    return LpResult(res.value, weights, (), res.pivots)


def integral_cover_optimum(lp: CoverLp, cap: int = ILP_COLUMN_CAP):
    """Minimum number of columns hitting every row (0/1 covering ILP).

    Branch and bound: branch on the elements of an uncovered row of
    smallest size; bound with a greedy packing of disjoint uncovered rows.
    Returns ``(value, columns)``.
    """
    if lp.ncols > cap:
        raise CapExceeded(f"0/1 covering search is capped at {cap} columns, got {lp.ncols}")
    if not lp.rows:
        return 0, ()
    work = lp.reduced()
    rows = sorted(work.rows, key=lambda r: bin(r).count("1"))
    greedy = _greedy_cover(rows)
    best = [len(greedy), greedy]

    def lower_bound(uncovered):
        used = 0
        count = 0
        for r in uncovered:
            if r & used == 0:
                used |= r
                count += 1
        return count

    def rec(chosen_mask, chosen, uncovered):
        if not uncovered:
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), list(chosen)
            return
        if len(chosen) + lower_bound(uncovered) >= best[0]:
            return
        row = uncovered[0]
        j = 0
        while row:
            if row & 1:
                bit = 1 << j
                rec(chosen_mask | bit, chosen + [j], [u for u in uncovered if not u & bit])
            row >>= 1
            j += 1

    rec(0, [], rows)
    return best[0], tuple(sorted(best[1]))


def _greedy_cover(rows):
    uncovered = list(rows)
    chosen = []
    while uncovered:
        counts = {}
        for r in uncovered:
            j = 0
            x = r
            while x:
                if x & 1:
                    counts[j] = counts.get(j, 0) + 1
                x >>= 1
                j += 1
        j = max(sorted(counts), key=lambda c: counts[c])
        chosen.append(j)
        uncovered = [r for r in uncovered if not (r >> j) & 1]
    return sorted(chosen)


# graph invariants ------------------------------------------------------------

def fixing_lp(G: Graph) -> CoverLp:
    from .fixing import fixed_graph
    fg = fixed_graph(G)
    return CoverLp(G.n, tuple(fg.row_masks))


def resolving_lp(G: Graph) -> CoverLp:
    from .fixing import resolving_neighborhood
    if not G.is_connected():
        raise GraphError("fractional metric dimension needs a connected graph")
    sets = [resolving_neighborhood(G, u, v) for u in range(G.n) for v in range(u + 1, G.n)]
    return CoverLp.from_sets(sets, G.n)


def fractional_fixing_number(G: Graph) -> LpResult:
    """Minimum total weight hitting every fixing neighbourhood of an active pair."""
    return solve_cover_lp(fixing_lp(G))


def fractional_metric_dimension(G: Graph) -> LpResult:
    """Minimum total weight hitting every resolving neighbourhood."""
    return solve_cover_lp(resolving_lp(G))
