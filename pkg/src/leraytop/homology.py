"""Exact rational simplicial homology via integer boundary matrices.

Ranks are computed by fraction-free elimination over arbitrary-precision
integers (rows are rescaled by their gcd after each pivot step), so no
floating point is involved anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import DEFAULT_SIMPLEX_GUARD, SimplicialComplex


@dataclass
class ChainBoundary:
    """Bases and boundary matrices of the augmented rational chain complex.

    ``bases[q]`` lists the q-simplices in lexicographic order, for q from -1
    (the empty simplex, handling reduced homology) up to dim(X).
    ``matrices[q]`` is the boundary from degree q to q-1, stored as sparse
    rows (one dict col->entry per element of ``bases[q-1]``).
    """
    bases: dict
    matrices: dict

    def dim_chain(self, q):
        return len(self.bases.get(q, ()))


@dataclass(frozen=True)
class BettiVector:
    """Reduced rational Betti numbers, plus the (-1)-degree rank and Euler
    characteristic (unreduced, from face counts)."""
    reduced: tuple
    minus_one: int
    euler: int

    def degree(self, i):
        if i == -1:
            return self.minus_one
        if 0 <= i < len(self.reduced):
            return self.reduced[i]
        return 0

    def max_nonzero_degree(self):
        """Largest i >= 0 with a nonzero reduced Betti number, or None."""
        out = None
        for i, b in enumerate(self.reduced):
            if b:
                out = i
        return out


def rank_of_rows(rows) -> int:
    """Exact rank over Q of an integer matrix given as sparse rows."""
    work = [dict(r) for r in rows if r]
    rank = 0
    while work:
        # deterministic pivot: smallest |entry|, then sparsest row
        best = None
        for ri, row in enumerate(work):
            for c, v in row.items():
                key = (abs(v), len(row), c)
                if best is None or key < best[0]:
                    best = (key, ri, c)
            if best[0][0] == 1 and best[0][1] <= 2:
                break
        _, ri, pc = best
        prow = work.pop(ri)
        pv = prow[pc]
        rank += 1
        nxt = []
        for row in work:
            a = row.pop(pc, None)
            if a is None:
                nxt.append(row)
                continue
            nr = {c: pv * v for c, v in row.items()}
            for c, v in prow.items():
                if c == pc:
                    continue
                w = nr.get(c, 0) - a * v
                if w:
                    nr[c] = w
                elif c in nr:
                    del nr[c]
            if nr:
                g = 0
                for v in nr.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    nr = {c: v // g for c, v in nr.items()}
                nxt.append(nr)
        work = nxt
    return rank


def boundary_matrices(X: SimplicialComplex,
                      guard=DEFAULT_SIMPLEX_GUARD) -> ChainBoundary:
    """Boundary matrices of X with the sorted-orientation sign convention,
    augmented with the all-ones map to the empty simplex."""
    simplices = X.all_simplices(include_empty=True, guard=guard)
    bases = {}
    for s in simplices:
        bases.setdefault(len(s) - 1, []).append(s)
    bases = {q: tuple(v) for q, v in bases.items()}
    index = {q: {s: i for i, s in enumerate(v)} for q, v in bases.items()}
    matrices = {}
    for q in sorted(bases):
        if q < 0:
            continue
        rows = [dict() for _ in bases[q - 1]]
        ix = index[q - 1]
        for j, s in enumerate(bases[q]):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                rows[ix[face]][j] = -1 if i % 2 else 1
        matrices[q] = rows
    return ChainBoundary(bases, matrices)


def reduced_betti(X: SimplicialComplex,
                  guard=DEFAULT_SIMPLEX_GUARD) -> BettiVector:
    """Reduced rational Betti numbers of X, computed exactly.

    Conventions: the void complex has all groups zero; the empty complex
    has rank one in degree -1 only.
    """
    if X.is_void():
        return BettiVector((), 0, 0)
    cb = boundary_matrices(X, guard=guard)
    ranks = {q: rank_of_rows(m) for q, m in cb.matrices.items()}
    d = X.dim
    reduced = tuple(cb.dim_chain(q) - ranks.get(q, 0) - ranks.get(q + 1, 0)
                    for q in range(d + 1))
    minus_one = 1 - ranks.get(0, 0)
    euler = sum((-1) ** q * cb.dim_chain(q) for q in range(d + 1))
    return BettiVector(reduced, minus_one, euler)


def unreduced_betti(X: SimplicialComplex, guard=DEFAULT_SIMPLEX_GUARD):
    """Unreduced rational Betti numbers; empty for the void/empty complex."""
    if X.is_void() or X.is_empty():
        return ()
    rb = reduced_betti(X, guard=guard)
    return (rb.reduced[0] + 1,) + rb.reduced[1:]


def euler_characteristic(X: SimplicialComplex, guard=DEFAULT_SIMPLEX_GUARD):
    """Alternating sum of face counts (unreduced convention)."""
    total = 0
    for s in X.all_simplices(guard=guard):
        total += -1 if len(s) % 2 == 0 else 1
    return total


def is_rationally_acyclic(X, guard=DEFAULT_SIMPLEX_GUARD) -> bool:
    """All reduced Betti numbers (degrees >= 0) vanish."""
    rb = reduced_betti(X, guard=guard)
    return all(b == 0 for b in rb.reduced)
