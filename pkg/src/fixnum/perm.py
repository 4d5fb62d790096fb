"""Permutation groups as stabilizer chains (deterministic Schreier-Sims).

A permutation is a tuple ``p`` with ``p[i]`` the image of ``i``.  Products
compose left to right: ``mul(a, b)`` applies ``a`` first, then ``b``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import prod


def identity(n: int) -> tuple:
    return tuple(range(n))


def is_identity(p) -> bool:
    return all(i == x for i, x in enumerate(p))


def mul(a, b) -> tuple:
    return tuple(b[x] for x in a)


def inverse(p) -> tuple:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def check_perm(p, n: int | None = None) -> None:
    if n is not None and len(p) != n:
        raise ValueError(f"permutation has length {len(p)}, expected {n}")
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {p}")


def transposition(n: int, u: int, v: int) -> tuple:
    p = list(range(n))
    p[u], p[v] = v, u
    return tuple(p)


def orbit_transversal(gens, point: int) -> dict:
    """Orbit of ``point`` with, for every orbit element ``b``, a group element
    mapping ``point`` to ``b``."""
    n = len(gens[0]) if gens else point + 1
    trans = {point: identity(n)}
    frontier = [point]
    while frontier:
        nxt = []
        for b in frontier:
            u = trans[b]
            for g in gens:
                c = g[b]
                if c not in trans:
                    trans[c] = mul(u, g)
                    nxt.append(c)
        frontier = nxt
    return trans


def orbit_labels(gens, n: int) -> list:
    """``labels[v]`` is the smallest vertex in the orbit of ``v``."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i, x in enumerate(g):
            a, b = find(i), find(x)
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


def orbits_of(gens, n: int) -> list:
    labels = orbit_labels(gens, n)
    groups = {}
    for v, lab in enumerate(labels):
        groups.setdefault(lab, []).append(v)
    return [tuple(vs) for _, vs in sorted(groups.items())]


@dataclass(frozen=True)
class PermGroup:
    """A permutation group stored as a base and strong generating set.

    ``level_gens[i]`` generates the pointwise stabilizer of ``base[:i]``;
    ``transversals[i]`` maps each point of the ``base[i]`` orbit under that
    stabilizer to a coset representative.
    """

    degree: int
    base: tuple
    level_gens: tuple
    transversals: tuple = field(repr=False)

    @property
    def strong_generators(self) -> tuple:
        return self.level_gens[0] if self.level_gens else ()

    @property
    def order(self) -> int:
        return prod(len(t) for t in self.transversals)

    def is_trivial(self) -> bool:
        return not self.strong_generators

    # membership ---------------------------------------------------------

    def sift(self, g, start: int = 0):
        """Strip ``g`` through the chain from ``start``; returns ``(residue, level)``."""
        for i in range(start, len(self.base)):
            b = g[self.base[i]]
            u = self.transversals[i].get(b)
            if u is None:
                return g, i
            g = mul(g, inverse(u))
        return g, len(self.base)

    def contains(self, g) -> bool:
        if len(g) != self.degree:
            return False
        residue, level = self.sift(tuple(g))
        return level == len(self.base) and is_identity(residue)

    __contains__ = contains

    # orbits and stabilizers ---------------------------------------------

    def orbit(self, u: int) -> frozenset:
        if not self.strong_generators:
            return frozenset([u])
        return frozenset(orbit_transversal(self.strong_generators, u))

    def orbits(self) -> list:
        return orbits_of(self.strong_generators, self.degree)

    def orbit_labels(self) -> list:
        return orbit_labels(self.strong_generators, self.degree)

    def point_stabilizer(self, x: int) -> "PermGroup":
        return self.pointwise_stabilizer([x])

    def pointwise_stabilizer(self, points) -> "PermGroup":
        pts = list(dict.fromkeys(points))
        if not pts or self.is_trivial():
            return self
        chain = schreier_sims(self.strong_generators, self.degree, base_prefix=pts, known_order=self.order)
        return chain.tail(len(pts))

    def tail(self, k: int) -> "PermGroup":
        """The subgroup fixing ``base[:k]`` pointwise, as its own chain."""
        k = min(k, len(self.base))
        base, gens, trans = self.base[k:], self.level_gens[k:], self.transversals[k:]
        # a level without generators means the stabilizer is already trivial
        while gens and not gens[0]:
            base, gens, trans = base[1:], gens[1:], trans[1:]
        return PermGroup(self.degree, base, gens, trans)

    def elements(self):
        """Yield every element (only sensible for small groups)."""
        # every element is u_{k-1} ... u_1 u_0 (applied left to right) for
        # coset representatives u_i taken from the transversals
        def rec(i, acc):
            if i < 0:
                yield acc
                return
            for u in self.transversals[i].values():
                yield from rec(i - 1, mul(acc, u))
        yield from rec(len(self.base) - 1, identity(self.degree))

    # serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {"order": str(self.order), "generators": [list(g) for g in self.strong_generators]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def trivial_group(n: int) -> PermGroup:
    return PermGroup(n, (), (), ())


def schreier_sims(gens, n: int, base_prefix=(), known_order: int | None = None) -> PermGroup:
    """Build a stabilizer chain for the group generated by ``gens``.

    The base starts with ``base_prefix`` (duplicates removed) and is extended
    as needed.  If ``known_order`` is given, construction stops once the
    chain reaches that order, which skips the Schreier-generator tests.
    """
    gens = [tuple(g) for g in gens if not is_identity(g)]
    gens = list(dict.fromkeys(gens))
    base = list(dict.fromkeys(base_prefix))
    if not gens:
        return trivial_group(n)
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(next(i for i in range(n) if g[i] != i))

    level_gens = [[g for g in gens if all(g[b] == b for b in base[:i])] for i in range(len(base))]
    trans = [orbit_transversal(level_gens[i], base[i]) if level_gens[i] else {base[i]: identity(n)}
             for i in range(len(base))]

    def order():
        return prod(len(t) for t in trans)

    def strip(h, start):
        for j in range(start, len(base)):
            b = h[base[j]]
            u = trans[j].get(b)
            if u is None:
                return h, j
            h = mul(h, inverse(u))
        return h, len(base)

    i = len(base) - 1
    while i >= 0:
        if known_order is not None and order() == known_order:
            break
        restart = False
        for beta, u_beta in list(trans[i].items()):
            for s in level_gens[i]:
                target = s[beta]
                h = mul(mul(u_beta, s), inverse(trans[i][target]))
                if is_identity(h):
                    continue
                residue, j = strip(h, i + 1)
                if j == len(base) and is_identity(residue):
                    continue
                if j == len(base):
                    base.append(next(p for p in range(n) if residue[p] != p))
                    level_gens.append([])
                    trans.append({base[-1]: identity(n)})
                for lvl in range(i + 1, j + 1):
                    level_gens[lvl].append(residue)
                    trans[lvl] = orbit_transversal(level_gens[lvl], base[lvl])
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1

    # prune the base to levels carrying a nontrivial stabilizer, but keep the
    # requested prefix so callers can take tails by prefix length
    keep = len(dict.fromkeys(base_prefix))
    while len(base) > keep and not level_gens[-1]:
        base.pop()
        level_gens.pop()
        trans.pop()
    return PermGroup(n, tuple(base), tuple(tuple(g) for g in level_gens), tuple(trans))


def group_from_generators(gens, n: int) -> PermGroup:
    return schreier_sims(gens, n)
