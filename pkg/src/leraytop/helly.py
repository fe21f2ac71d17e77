"""Finite set families with exact intersection oracles, nerves, Helly
numbers, grouped (union-of-pieces) families, and the verification harness
for the r(d+1) Helly bound.

Geometry is restricted to axis-parallel boxes with rational corners:
intersections are computed exactly and every nonempty intersection is again
a box (convex), so box families are automatically good covers.  Atom
families are a combinatorial stand-in when only the intersection pattern
matters.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import (ComplexError, SimplicialComplex, _maximal)
from .leray import leray_by_links
from .multiproj import PartitionedComplex, fiber_bound, make_partitioned, project
from .rng import CounterRng


class FamilyError(ValueError):
    """Invalid set-family input."""


@dataclass(frozen=True)
class Box:
    """Product of closed rational intervals [lo, hi] per axis (nonempty)."""
    intervals: tuple

    def __post_init__(self):
        for lo, hi in self.intervals:
            if lo > hi:
                raise FamilyError("interval with lo > hi: [%s, %s]" % (lo, hi))

    @property
    def dimension(self):
        return len(self.intervals)


def make_box(intervals) -> Box:
    return Box(tuple((Fraction(lo), Fraction(hi)) for lo, hi in intervals))


def box_meet(boxes):
    """Intersection of boxes; None if empty."""
    boxes = list(boxes)
    if not boxes:
        raise FamilyError("intersection of an empty collection is undefined")
    d = boxes[0].dimension
    out = []
    for axis in range(d):
        lo = max(b.intervals[axis][0] for b in boxes)
        hi = min(b.intervals[axis][1] for b in boxes)
        if lo > hi:
            return None
        out.append((lo, hi))
    return Box(tuple(out))


def boxes_disjoint(a: Box, b: Box) -> bool:
    return box_meet([a, b]) is None


class BoxFamily:
    """Named nonempty boxes in R^d with an exact intersection oracle."""

    def __init__(self, dimension, members):
        self.dimension = int(dimension)
        self.members = dict(members)
        for name, box in self.members.items():
            if box.dimension != self.dimension:
                raise FamilyError("member %r has wrong dimension" % (name,))
        self.names = tuple(self.members)

    def is_empty_intersection(self, names):
        return box_meet([self.members[n] for n in names]) is None


class AtomFamily:
    """Named finite subsets of a ground set of atoms; intersection pattern
    only, no good-cover claim."""

    def __init__(self, members):
        self.members = {name: frozenset(v) for name, v in members.items()}
        self.names = tuple(self.members)

    def is_empty_intersection(self, names):
        it = iter(names)
        out = set(self.members[next(it)])
        for n in it:
            out &= self.members[n]
            if not out:
                return True
        return not out


def nerve(family) -> SimplicialComplex:
    """The nerve: one vertex per member, a simplex per subfamily with
    nonempty intersection.  Vertex labels carry the member names."""
    names = family.names
    n = len(names)
    simplices = [(i,) for i in range(n)
                 if not family.is_empty_intersection((names[i],))]
    level = list(simplices)
    while level:
        nxt = []
        for s in level:
            for j in range(s[-1] + 1, n):
                cand = s + (j,)
                if not family.is_empty_intersection([names[i] for i in cand]):
                    nxt.append(cand)
        simplices.extend(nxt)
        level = nxt
    if not simplices:
        return SimplicialComplex(0, ())
    return SimplicialComplex(n, _maximal(simplices), labels=names)


@dataclass(frozen=True)
class HellyReport:
    helly_number: int
    witness: tuple            # maximal minimal-empty subfamily, or ()
    nerve_leray: int
    bound: int                # 1 + nerve_leray

    @property
    def holds(self):
        return self.helly_number <= self.bound


def minimal_empty_subfamilies(family, cap=20):
    """Inclusion-minimal subfamilies with empty intersection (the minimal
    non-faces of the nerve)."""
    names = family.names
    n = len(names)
    if n > cap:
        raise FamilyError("family size %d exceeds cap %d" % (n, cap))
    nv = nerve(family)
    simplex_set = set(nv.all_simplices(include_empty=True))
    out = []
    for size in range(1, n + 1):
        for cand in combinations(range(n), size):
            if cand in simplex_set:
                continue
            if all(cand[:i] + cand[i + 1:] in simplex_set
                   for i in range(size)):
                out.append(tuple(names[i] for i in cand))
    return out


def helly_number(family, cap=20) -> HellyReport:
    """The Helly number: the largest minimal empty-intersection subfamily
    (or 1 if all intersections are nonempty), plus the nerve-Leray bound."""
    minimal = minimal_empty_subfamilies(family, cap=cap)
    if minimal:
        witness = max(minimal, key=len)
        h = max(1, len(witness))
    else:
        witness = ()
        h = 1
    nl = leray_by_links(nerve(family)).value
    return HellyReport(h, witness, nl, 1 + nl)


def helly_number_direct(family, cap=12) -> int:
    """Independent oracle: smallest h such that every subfamily all of whose
    subsets of size <= h intersect has nonempty total intersection."""
    names = family.names
    n = len(names)
    if n > cap:
        raise FamilyError("family size %d exceeds cap %d" % (n, cap))
    empty = {}
    for size in range(1, n + 1):
        for K in combinations(range(n), size):
            empty[K] = family.is_empty_intersection([names[i] for i in K])
    for h in range(1, n + 1):
        ok = True
        for size in range(1, n + 1):
            for K in combinations(range(n), size):
                if not empty[K]:
                    continue
                if all(not empty[Kp] for t in range(1, min(h, size) + 1)
                       for Kp in combinations(K, t)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return h
    return n


def check_hl(family, cap=20):
    """Verify the nerve-Leray bound on the Helly number."""
    report = helly_number(family, cap=cap)
    return {
        "claim": "helly_leray_bound",
        "helly": report.helly_number,
        "nerve_leray": report.nerve_leray,
        "bound": report.bound,
        "holds": report.holds,
    }


class UnionFamily:
    """Members that are finite unions of boxes, with the exact emptiness
    oracle (no disjointness or piece-count validation)."""

    def __init__(self, dimension, members):
        self.dimension = int(dimension)
        self.members = {name: tuple(boxes) for name, boxes in members.items()}
        self.names = tuple(self.members)

    def is_empty_intersection(self, names):
        stack = [None]
        for name in names:
            nxt = []
            for acc in stack:
                for box in self.members[name]:
                    b = box if acc is None else box_meet([acc, box])
                    if b is not None:
                        nxt.append(b)
            if not nxt:
                return True
            stack = nxt
        return False


# -- grouped families ---------------------------------------------------


class FrValidationError(FamilyError):
    """The grouped family violates the at-most-r disjoint-pieces property;
    carries the violating group subfamily."""

    def __init__(self, message, subfamily):
        super().__init__(message)
        self.subfamily = subfamily


@dataclass(frozen=True)
class FrFamily:
    """Members G_i, each a disjoint union of at most r base boxes (pieces);
    every subfamily intersection decomposes into at most r disjoint boxes."""
    dimension: int
    base: object                 # BoxFamily of all pieces
    groups: tuple                # ((group name, (piece names...)), ...)
    r: int

    @property
    def names(self):
        return tuple(g for g, _ in self.groups)

    def pieces_of(self, group_name):
        for g, pieces in self.groups:
            if g == group_name:
                return pieces
        raise FamilyError("unknown group %r" % (group_name,))

    def _choice_boxes(self, names):
        """Nonempty piece-choice intersections over the named groups."""
        groups = [self.pieces_of(g) for g in names]
        out = []
        stack = [[]]
        for pieces in groups:
            stack = [c + [p] for c in stack for p in pieces]
        for choice in stack:
            b = box_meet([self.base.members[p] for p in choice])
            if b is not None:
                out.append((tuple(choice), b))
        return out

    def is_empty_intersection(self, names):
        return not self._choice_boxes(names)


def make_fr_family(base: BoxFamily, grouping, r) -> FrFamily:
    """Validate and build a grouped family.

    Within each group the pieces must be pairwise disjoint; for every
    subfamily of groups the nonempty piece-choice boxes must be pairwise
    disjoint and number at most r.
    """
    groups = tuple((g, tuple(pieces)) for g, pieces in grouping)
    all_pieces = [p for _, pieces in groups for p in pieces]
    if len(set(all_pieces)) != len(all_pieces):
        raise FamilyError("a piece occurs in two groups")
    for g, pieces in groups:
        if not pieces:
            raise FamilyError("group %r has no pieces" % (g,))
        if len(pieces) > r:
            raise FrValidationError(
                "group %r has more than r=%d pieces" % (g, r), (g,))
        for a, b in combinations(pieces, 2):
            if not boxes_disjoint(base.members[a], base.members[b]):
                raise FrValidationError(
                    "pieces %r and %r of group %r overlap" % (a, b, g), (g,))
    fam = FrFamily(base.dimension, base, groups, int(r))
    names = fam.names
    for size in range(2, len(names) + 1):
        for sub in combinations(names, size):
            boxes = fam._choice_boxes(sub)
            if len(boxes) > r:
                raise FrValidationError(
                    "intersection over %r splits into %d > r pieces"
                    % (sub, len(boxes)), sub)
            for (_, a), (_, b) in combinations(boxes, 2):
                if not boxes_disjoint(a, b):
                    raise FrValidationError(
                        "intersection over %r has overlapping pieces"
                        % (sub,), sub)
    return fam


def pieces_projection(fr: FrFamily):
    """The nerve of all pieces, partitioned by group, with its projection
    report: the image must equal the nerve of the grouped family and the
    fiber bound must be at most r."""
    piece_order = [p for _, pieces in fr.groups for p in pieces]
    piece_family = BoxFamily(fr.dimension,
                             {p: fr.base.members[p] for p in piece_order})
    X = nerve(piece_family)
    parts = []
    pos = {p: i for i, p in enumerate(piece_order)}
    for _, pieces in fr.groups:
        parts.append(tuple(pos[p] for p in pieces))
    px = make_partitioned(X, parts)
    image = project(px)
    ng = nerve(fr)
    matches = image.facets == ng.facets and image.vertex_count == ng.vertex_count
    r_val, witness = fiber_bound(px)
    return px, {
        "claim": "pieces_projection",
        "image_matches_nerve": matches,
        "fiber_bound": r_val,
        "fiber_witness": witness,
        "r": fr.r,
        "holds": matches and r_val <= fr.r,
    }


def check_amenta(fr: FrFamily, cap=20):
    """Verify h(G) <= r(d+1) and the full chain of inequalities
    h(G) <= 1 + L(image) <= 1 + r L(X) + r - 1 <= r(d+1)."""
    report = helly_number(fr, cap=cap)
    px, proj_report = pieces_projection(fr)
    lx = leray_by_links(px.complex).value
    l_image = leray_by_links(project(px)).value
    r, d = fr.r, fr.dimension
    h = report.helly_number
    chain = (
        h <= 1 + l_image,
        1 + l_image <= 1 + r * lx + r - 1,
        1 + r * lx + r - 1 <= r * (d + 1),
    )
    return {
        "claim": "amenta_bound",
        "helly": h,
        "r": r,
        "d": d,
        "bound": r * (d + 1),
        "leray_x": lx,
        "leray_image": l_image,
        "projection": proj_report,
        "chain_holds": all(chain),
        "holds": h <= r * (d + 1) and all(chain) and proj_report["holds"],
    }


# -- generators ----------------------------------------------------------


def _random_box(rng: CounterRng, d, span=12, max_len=5):
    out = []
    for _ in range(d):
        lo = Fraction(rng.randint(2 * span), 2)
        length = Fraction(1 + rng.randint(2 * max_len), 2)
        out.append((lo, lo + length))
    return Box(tuple(out))


def random_fr_family(d, n_groups, r, seed, max_attempts=200) -> FrFamily:
    """Deterministic valid grouped family: resamples (seeded) until the
    at-most-r disjoint-pieces property validates."""
    for attempt in range(max_attempts):
        rng = CounterRng((seed << 16) + attempt)
        base_members = {}
        grouping = []
        ok = True
        for gi in range(n_groups):
            count = 1 + rng.randint(r)
            pieces = []
            for pi in range(count):
                name = "F%d_%d" % (gi, pi)
                for _ in range(20):
                    box = _random_box(rng, d)
                    if all(boxes_disjoint(box, base_members[p])
                           for p in pieces):
                        base_members[name] = box
                        pieces.append(name)
                        break
                else:
                    ok = False
                if not ok:
                    break
            if not ok:
                break
            grouping.append(("G%d" % gi, tuple(pieces)))
        if not ok:
            continue
        base = BoxFamily(d, base_members)
        try:
            return make_fr_family(base, grouping, r)
        except FrValidationError:
            continue
    raise FamilyError("no valid grouped family found for seed %d" % seed)


def interval_family(intervals) -> BoxFamily:
    """Convenience: a 1-dimensional box family from (name, lo, hi) triples."""
    return BoxFamily(1, {name: make_box([(lo, hi)])
                         for name, lo, hi in intervals})
