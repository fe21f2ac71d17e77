"""Symmetric-group action on multiple-point complexes, alternating chain
complexes, the first page of the image computing spectral sequence, and its
consistency checks.

The alternating subcomplex is spanned, per degree, by one representative of
each simplex orbit whose setwise stabilizer acts only by even vertex
permutations relative to the permutation sign (the sign-isotypic survival
condition); the projector itself is never evaluated numerically except in
tests.  Page differentials are out of scope: only dimensions and their
numerical consequences (vanishing regions, Euler consistency) are computed.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .core import (DEFAULT_SIMPLEX_GUARD, ComplexError, GuardExceeded,
                   SimplicialComplex)
from .homology import euler_characteristic, rank_of_rows, unreduced_betti
from .leray import leray_by_links
from .multiproj import (DEFAULT_MPC_SIMPLEX_GUARD, DEFAULT_MPC_VERTEX_GUARD,
                        MultiPointComplex, PartitionedComplex, fiber_bound,
                        multiple_point_complex, project)


def perm_sign(p):
    """Parity of a permutation given as a tuple of images."""
    p = list(p)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def _sort_sign(values):
    """Sign of the permutation sorting a list of distinct values, or 0 on a
    repeat."""
    sign = 1
    vals = list(values)
    for i in range(len(vals)):
        m = min(range(i, len(vals)), key=lambda j: vals[j])
        if vals[m] == vals[i] and m != i:
            return 0
        if m != i:
            vals[i], vals[m] = vals[m], vals[i]
            sign = -sign
    for a, b in zip(vals, vals[1:]):
        if a == b:
            return 0
    return sign


@dataclass(frozen=True)
class SymAction:
    """A coordinate permutation of a multiple-point complex, as a signed
    simplicial map."""
    perm: tuple
    vertex_map: tuple

    def on_simplex(self, simplex):
        """Image of an oriented simplex: (sorted image tuple, sign)."""
        images = [self.vertex_map[v] for v in simplex]
        return tuple(sorted(images)), _sort_sign(images)


def sym_action(M: MultiPointComplex, perm) -> SymAction:
    """The action of a permutation of the k coordinates on M's vertices."""
    perm = tuple(perm)
    if sorted(perm) != list(range(M.k)):
        raise ComplexError("not a permutation of range(%d)" % M.k)
    if not M.equal_factors:
        raise ComplexError("the symmetric action needs equal factors")
    index = M.vertex_index()
    vmap = []
    for part, tup in zip(M.part_of_vertex, M.tuples):
        image = tuple(tup[perm[j]] for j in range(M.k))
        vmap.append(index[(part, image)])
    return SymAction(perm, tuple(vmap))


@dataclass
class AltChainComplex:
    """Basis (orbit representatives) and boundary matrices of the
    alternating subspace of the chain complex of a multiple-point complex."""
    reps: dict            # degree -> list of simplices (lex-least reps)
    matrices: dict        # degree -> sparse rows over reps[degree-1]

    def dims(self):
        return {q: len(v) for q, v in self.reps.items()}

    def dim(self, q):
        return len(self.reps.get(q, ()))


def _actions(M: MultiPointComplex):
    out = []
    for perm in permutations(range(M.k)):
        out.append((perm_sign(perm), sym_action(M, perm)))
    return out


DEFAULT_ALT_WORK_GUARD = 2_000_000


def alt_chain_complex(M: MultiPointComplex,
                      guard=DEFAULT_MPC_SIMPLEX_GUARD,
                      work_guard=DEFAULT_ALT_WORK_GUARD) -> AltChainComplex:
    """Orbit-representative basis of the alternating chains and the
    restriction of the boundary to it."""
    actions = _actions(M)
    simplices = M.complex.all_simplices(guard=guard)
    if len(actions) * len(simplices) > work_guard:
        raise GuardExceeded(
            "alternating-orbit scan (%d simplices x %d group elements) "
            "exceeds work guard %d"
            % (len(simplices), len(actions), work_guard))
    by_deg = {}
    for s in simplices:
        by_deg.setdefault(len(s) - 1, []).append(s)
    reps = {}
    # simplex -> (rep, coeff) for surviving orbits, None for killed ones
    transfer = {}
    for q in sorted(by_deg):
        reps_q = []
        for s in by_deg[q]:
            if s in transfer:
                continue
            alive = True
            orbit = {}
            for gsign, act in actions:
                t, eps = act.on_simplex(s)
                if t == s and gsign * eps == -1:
                    alive = False
                if t not in orbit:
                    orbit[t] = gsign * eps
            if alive:
                reps_q.append(s)
                for t, c in orbit.items():
                    transfer[t] = (s, c)
            else:
                for t in orbit:
                    transfer[t] = None
        reps[q] = reps_q
    matrices = {}
    for q in sorted(reps):
        if q <= 0 or not reps[q]:
            continue
        row_index = {s: i for i, s in enumerate(reps[q - 1])}
        rows = [dict() for _ in reps[q - 1]]
        for j, s in enumerate(reps[q]):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                hit = transfer.get(face)
                if hit is None:
                    continue
                rep, c = hit
                ri = row_index[rep]
                w = rows[ri].get(j, 0) + (-1 if i % 2 else 1) * c
                if w:
                    rows[ri][j] = w
                elif j in rows[ri]:
                    del rows[ri][j]
        matrices[q] = rows
    return AltChainComplex(reps, matrices)


def alt_betti(M: MultiPointComplex, guard=DEFAULT_MPC_SIMPLEX_GUARD):
    """Dimensions of the homology of the alternating chain complex
    (unreduced convention).  Empty tuple for a void complex."""
    if M.complex.is_void():
        return ()
    acc = alt_chain_complex(M, guard=guard)
    top = max(acc.reps) if acc.reps else -1
    ranks = {q: rank_of_rows(m) for q, m in acc.matrices.items()}
    return tuple(acc.dim(q) - ranks.get(q, 0) - ranks.get(q + 1, 0)
                 for q in range(top + 1))


@dataclass(frozen=True)
class E1Page:
    """First page of the image computing spectral sequence: column p holds
    the alternating homology of the (p+1)-fold multiple-point complex."""
    r: int
    table: dict           # (p, q) -> natural, for 0 <= p <= r-1
    image_betti: tuple
    extra_column_zero: bool

    def entry(self, p, q):
        return self.table.get((p, q), 0)

    def signed_sum(self):
        return sum((-1) ** (p + q) * n for (p, q), n in self.table.items())


def e1_page(px: PartitionedComplex,
            vertex_guard=DEFAULT_MPC_VERTEX_GUARD,
            guard=DEFAULT_MPC_SIMPLEX_GUARD) -> E1Page:
    """Compute the page columns p = 0..r-1, plus the column at p = r which
    must be identically zero."""
    r, _ = fiber_bound(px)
    table = {}
    for p in range(r):
        M = multiple_point_complex(px, p + 1, vertex_guard=vertex_guard,
                                   guard=guard)
        for q, n in enumerate(alt_betti(M, guard=guard)):
            table[(p, q)] = n
    M_extra = multiple_point_complex(px, r + 1, vertex_guard=vertex_guard,
                                     guard=guard)
    extra = alt_betti(M_extra, guard=guard)
    image = unreduced_betti(project(px))
    return E1Page(r, table, image, all(n == 0 for n in extra))


def double_point_closure(M: MultiPointComplex,
                         guard=DEFAULT_MPC_SIMPLEX_GUARD) -> MultiPointComplex:
    """The subcomplex generated by simplices whose k coordinate sections are
    pairwise distinct, together with all their faces."""
    if not M.equal_factors:
        raise ComplexError("double-point closure needs equal factors")
    gens = []
    for s in M.complex.all_simplices(guard=guard):
        secs = [frozenset(M.tuples[v][r] for v in s) for r in range(M.k)]
        if len(set(secs)) == M.k:
            gens.append(s)
    from .core import _maximal
    facets = _maximal(gens) if gens else frozenset()
    cx = SimplicialComplex(M.complex.vertex_count, facets,
                           labels=M.complex.labels)
    return MultiPointComplex(cx, M.k, M.parts, M.part_of_vertex, M.tuples,
                             M.equal_factors)


def check_alt_chain_iso(M: MultiPointComplex, guard=DEFAULT_MPC_SIMPLEX_GUARD):
    """The inclusion of the distinct-coordinates subcomplex induces a
    bijection on alternating chains: compare orbit bases per degree."""
    D = double_point_closure(M, guard=guard)
    alt_m = alt_chain_complex(M, guard=guard)
    alt_d = alt_chain_complex(D, guard=guard)
    degrees = sorted(set(alt_m.reps) | set(alt_d.reps))
    dims = {q: (alt_m.dim(q), alt_d.dim(q)) for q in degrees}
    bijective = all(sorted(alt_m.reps.get(q, [])) == sorted(alt_d.reps.get(q, []))
                    for q in degrees)
    return {
        "claim": "alt_chain_inclusion",
        "dims": dims,
        "holds": bijective and all(a == b for a, b in dims.values()),
    }


def check_euler(px: PartitionedComplex,
                vertex_guard=DEFAULT_MPC_VERTEX_GUARD,
                guard=DEFAULT_MPC_SIMPLEX_GUARD):
    """Euler characteristic of the image equals the signed page sum."""
    page = e1_page(px, vertex_guard=vertex_guard, guard=guard)
    chi = euler_characteristic(project(px))
    return {
        "claim": "e1_euler_consistency",
        "chi_image": chi,
        "page_sum": page.signed_sum(),
        "extra_column_zero": page.extra_column_zero,
        "holds": chi == page.signed_sum() and page.extra_column_zero,
    }


def check_proof_vanishing(px: PartitionedComplex,
                          vertex_guard=DEFAULT_MPC_VERTEX_GUARD,
                          guard=DEFAULT_MPC_SIMPLEX_GUARD,
                          leray_guard=DEFAULT_SIMPLEX_GUARD):
    """The page vanishes on the region p <= r-1, p+q >= r*L(X)+r-1 (for a
    complex with positive Leray number; with L(X) = 0 the degree-0 entries
    are exempt)."""
    lx = leray_by_links(px.complex, guard=leray_guard).value
    page = e1_page(px, vertex_guard=vertex_guard, guard=guard)
    r = page.r
    threshold = r * lx + r - 1
    bad = []
    for (p, q), n in page.table.items():
        if p + q >= threshold and n != 0:
            if lx == 0 and q == 0:
                continue
            bad.append((p, q, n))
    return {
        "claim": "proof_region_vanishing",
        "leray_x": lx,
        "r": r,
        "threshold": threshold,
        "violations": bad,
        "holds": not bad,
    }
