"""Partitioned complexes, the projection onto a simplex, fiber bounds,
multiple-point complexes, inequality checkers and instance generators.

A partitioned complex carries a vertex partition V = V_1 u ... u V_m whose
induced subcomplexes are all 0-dimensional; the projection sends every
vertex of V_i to vertex i of the (m-1)-simplex.  The multiple-point complex
of factors X_1,...,X_k (all on the same parts) has vertices (i, (v_1..v_k))
with v_r in V_i, and a simplex over a part set I whenever each coordinate-r
projection is a simplex of X_r.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import (DEFAULT_SIMPLEX_GUARD, ComplexError, GuardExceeded,
                   SimplicialComplex, _maximal, as_simplex, boundary_complex,
                   make_complex)
from .homology import reduced_betti
from .leray import leray_by_links
from .rng import CounterRng

DEFAULT_MPC_VERTEX_GUARD = 20_000
DEFAULT_MPC_SIMPLEX_GUARD = 200_000


@dataclass(frozen=True)
class PartitionedComplex:
    """A complex together with a partition into 0-dimensionally induced
    parts."""
    complex: SimplicialComplex
    parts: tuple

    @property
    def m(self):
        return len(self.parts)

    def part_of(self):
        out = [None] * self.complex.vertex_count
        for i, part in enumerate(self.parts):
            for v in part:
                out[v] = i
        return out


def make_partitioned(X: SimplicialComplex, parts) -> PartitionedComplex:
    """Validate the partition: disjoint cover of the vertex table, no
    simplex with two vertices in one part, every part nonempty."""
    parts = tuple(tuple(sorted(p)) for p in parts)
    if not parts:
        raise ComplexError("at least one part is required")
    seen = []
    for p in parts:
        if not p:
            raise ComplexError("empty part")
        seen.extend(p)
    if sorted(seen) != list(range(X.vertex_count)):
        raise ComplexError("parts do not partition the vertex table")
    owner = {}
    for i, p in enumerate(parts):
        for v in p:
            owner[v] = i
    for f in X.facets:
        ps = [owner[v] for v in f]
        if len(set(ps)) != len(ps):
            raise ComplexError(
                "facet %r meets a part twice; induced part subcomplexes "
                "must be 0-dimensional" % (f,))
    return PartitionedComplex(X, parts)


def project(px: PartitionedComplex) -> SimplicialComplex:
    """The image complex on the part indices 0..m-1."""
    owner = px.part_of()
    if px.complex.is_void():
        return SimplicialComplex(px.m, ())
    facets = {tuple(sorted(owner[v] for v in f)) for f in px.complex.facets}
    return SimplicialComplex(px.m, _maximal(facets))


def _sections(X: SimplicialComplex, part_vertex_lists):
    """All ways to pick one vertex per listed part forming a simplex of X."""
    out = []

    def extend(prefix, depth):
        if depth == len(part_vertex_lists):
            out.append(tuple(prefix))
            return
        for v in part_vertex_lists[depth]:
            cand = prefix + [v]
            if X.contains(sorted(cand)):
                extend(cand, depth + 1)

    extend([], 0)
    return out


def fiber_bound(px: PartitionedComplex):
    """The maximal number of preimage points over a point of the image,
    computed as the maximal number of sections over an image simplex.

    Returns (r, witness) where witness is an image simplex attaining r.
    """
    Y = project(px)
    X = px.complex
    best = 0
    witness = None
    for sigma in Y.all_simplices():
        lists = [px.parts[i] for i in sigma]
        count = len(_sections(X, lists))
        if count > best:
            best = count
            witness = sigma
    return best, witness


def tilde_closure(px: PartitionedComplex, sigma):
    """Union of the parts met by a simplex of the complex."""
    sigma = as_simplex(sigma)
    if not px.complex.contains(sigma):
        raise ComplexError("simplex %r not in complex" % (sigma,))
    owner = px.part_of()
    out = set()
    for v in sigma:
        out.update(px.parts[owner[v]])
    return frozenset(out)


@dataclass(frozen=True)
class MultiPointComplex:
    """Simplicial model of the k-fold multiple-point set of projections.

    Vertices are labeled (part index, k-tuple of factor vertices); the
    underlying complex keeps those labels.
    """
    complex: SimplicialComplex
    k: int
    parts: tuple
    part_of_vertex: tuple
    tuples: tuple
    equal_factors: bool

    def vertex_index(self):
        return {(p, t): i for i, (p, t) in
                enumerate(zip(self.part_of_vertex, self.tuples))}


def generalized_mpc(pxs, vertex_guard=DEFAULT_MPC_VERTEX_GUARD,
                    guard=DEFAULT_MPC_SIMPLEX_GUARD) -> MultiPointComplex:
    """The multiple-point complex of factors sharing one part structure."""
    if not pxs:
        raise ComplexError("at least one factor is required")
    parts = pxs[0].parts
    for px in pxs[1:]:
        if px.parts != parts:
            raise ComplexError("factors have mismatched part structures")
    k = len(pxs)
    if sum(len(p) ** k for p in parts) > vertex_guard:
        raise GuardExceeded(
            "multiple-point vertex bound exceeds guard %d" % vertex_guard)
    images = [project(px) for px in pxs]
    common = [s for s in images[0].all_simplices()
              if all(img.contains(s) for img in images[1:])]
    simplex_sets = set()
    for I in common:
        lists = [parts[i] for i in I]
        secs = [_sections(factor.complex, lists) for factor in pxs]
        total = 1
        for s in secs:
            total *= len(s)
        if len(simplex_sets) + total > guard:
            raise GuardExceeded(
                "multiple-point simplex count exceeds guard %d" % guard)
        stack = [()]
        for sec in secs:
            stack = [prefix + (choice,) for prefix in stack for choice in sec]
        for combo in stack:
            simplex_sets.add(frozenset(
                (I[j], tuple(sec[j] for sec in combo))
                for j in range(len(I))))
    keys = sorted({v for s in simplex_sets for v in s})
    idx = {key: i for i, key in enumerate(keys)}
    facets = _maximal(tuple(sorted(idx[v] for v in s)) for s in simplex_sets)
    cx = SimplicialComplex(len(keys), facets, labels=keys)
    equal = all(px.complex == pxs[0].complex for px in pxs[1:])
    return MultiPointComplex(
        cx, k, parts,
        tuple(key[0] for key in keys), tuple(key[1] for key in keys), equal)


def multiple_point_complex(px: PartitionedComplex, k,
                           vertex_guard=DEFAULT_MPC_VERTEX_GUARD,
                           guard=DEFAULT_MPC_SIMPLEX_GUARD):
    """M_k: the k-fold multiple-point complex of a single complex."""
    if k < 1:
        raise ComplexError("k must be at least 1")
    return generalized_mpc([px] * k, vertex_guard=vertex_guard, guard=guard)


# -- checkers ------------------------------------------------------------


def check_projection_theorem(px: PartitionedComplex,
                             guard=DEFAULT_SIMPLEX_GUARD):
    """Verify L(Y) <= r*L(X) + r - 1 for Y the image of the projection."""
    lx = leray_by_links(px.complex, guard=guard).value
    r, witness = fiber_bound(px)
    ly = leray_by_links(project(px), guard=guard).value
    bound = r * lx + r - 1
    return {
        "claim": "projection_bound",
        "leray_x": lx,
        "fiber_bound": r,
        "fiber_witness": witness,
        "leray_y": ly,
        "bound": bound,
        "holds": ly <= bound,
        "tight": ly == bound,
    }


def check_mps_vanishing(pxs, vertex_guard=DEFAULT_MPC_VERTEX_GUARD,
                        guard=DEFAULT_MPC_SIMPLEX_GUARD):
    """Verify that the multiple-point complex of the factors has vanishing
    reduced homology from the sum of the factor Leray numbers on."""
    total = sum(leray_by_links(px.complex).value for px in pxs)
    M = generalized_mpc(pxs, vertex_guard=vertex_guard, guard=guard)
    rb = reduced_betti(M.complex, guard=guard)
    bad = [j for j, b in enumerate(rb.reduced) if j >= total and b != 0]
    return {
        "claim": "mps_vanishing",
        "leray_sum": total,
        "betti": rb.reduced,
        "violations": bad,
        "holds": not bad,
    }


def check_intersection_bound(Xs, guard=DEFAULT_SIMPLEX_GUARD):
    """Verify L of the intersection against the sum of Leray numbers."""
    from .core import intersection
    if not Xs:
        raise ComplexError("at least one complex is required")
    inter = Xs[0]
    for X in Xs[1:]:
        inter = intersection(inter, X)
    values = [leray_by_links(X, guard=guard).value for X in Xs]
    l_inter = leray_by_links(inter, guard=guard).value
    return {
        "claim": "intersection_bound",
        "leray_each": values,
        "leray_intersection": l_inter,
        "holds": l_inter <= sum(values),
    }


# -- generators ------------------------------------------------------------


def extremal_example(r, d) -> PartitionedComplex:
    """The tight instance: m = r*d parts of size r; the complex is a
    disjoint union of r joins, each with one boundary-sphere factor.

    Vertex (i, j) for part i in [m], copy j in [r] has id i*r + j.  Copy k
    carries the join of the solid simplices on the blocks A_l x {k} (l != k)
    and the boundary complex on A_k x {k}.
    """
    if r < 1 or d < 2:
        raise ComplexError("require r >= 1 and d >= 2")
    m = r * d
    blocks = [tuple(range(l * d, (l + 1) * d)) for l in range(r)]
    facet_lists = []
    for k in range(r):
        choices = [()]
        for l in range(r):
            block_verts = tuple(i * r + k for i in blocks[l])
            if l == k:
                factors = list(combinations(block_verts, d - 1))
            else:
                factors = [block_verts]
            choices = [c + f for c in choices for f in factors]
        facet_lists.extend(choices)
    X = make_complex(facet_lists, vertex_count=m * r)
    parts = [tuple(i * r + j for j in range(r)) for i in range(m)]
    return make_partitioned(X, parts)


def random_partitioned_complex(m, part_sizes, dimension, density,
                               seed) -> PartitionedComplex:
    """Seeded random partitioned complex: every vertex is present and each
    cross-part candidate simplex of size 2..dimension+1 is kept with the
    given probability, then closed downward."""
    part_sizes = tuple(int(s) for s in part_sizes)
    if len(part_sizes) != m:
        raise ComplexError("expected %d part sizes" % m)
    if any(s < 1 for s in part_sizes):
        raise ComplexError("empty parts are not allowed")
    if not 0 <= density <= 1:
        raise ComplexError("density must lie in [0, 1]")
    parts = []
    start = 0
    for s in part_sizes:
        parts.append(tuple(range(start, start + s)))
        start += s
    rng = CounterRng(seed)
    facet_lists = [[v] for v in range(start)]
    top = min(dimension + 1, m)
    for size in range(2, top + 1):
        for part_combo in combinations(range(m), size):
            lists = [parts[i] for i in part_combo]
            stack = [()]
            for lst in lists:
                stack = [pre + (v,) for pre in stack for v in lst]
            for cand in stack:
                if rng.uniform() < density:
                    facet_lists.append(sorted(cand))
    X = make_complex(facet_lists, vertex_count=start)
    return make_partitioned(X, parts)


def random_complex(n, dimension, density, seed) -> SimplicialComplex:
    """Seeded random complex on n vertices (singleton parts)."""
    px = random_partitioned_complex(n, [1] * n, dimension, density, seed)
    return px.complex


def projection_image_of_extremal(r, d) -> SimplicialComplex:
    """The expected image of the extremal instance: the boundary of the
    (r*d-1)-simplex."""
    return boundary_complex(range(r * d))
