"""Canonical JSON formats for complexes, partitioned complexes and box
families.

Writers emit facets sorted lexicographically and keys in a fixed order, so
saving a canonicalized value is byte-deterministic; ``save(load(f))`` is the
identity on canonical input.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .core import ComplexError, SimplicialComplex, make_complex
from .helly import Box, BoxFamily, FamilyError, make_box
from .multiproj import PartitionedComplex, make_partitioned


class FormatError(ValueError):
    """Malformed input file; message carries the offending field."""


def _canon_dumps(obj):
    return json.dumps(obj, separators=(", ", ": ")) + "\n"


def _sorted_facets(X: SimplicialComplex):
    return [list(f) for f in sorted(X.facets)]


def complex_to_json(X: SimplicialComplex) -> str:
    labels = list(X.labels) if X.labels is not None else \
        ["v%d" % i for i in range(X.vertex_count)]
    return _canon_dumps({"vertices": [str(l) for l in labels],
                         "facets": _sorted_facets(X)})


def _parse_facets(doc, n):
    facets = doc.get("facets")
    if not isinstance(facets, list):
        raise FormatError("field 'facets' must be a list of vertex-id lists")
    for f in facets:
        if not isinstance(f, list) or not all(isinstance(v, int) for v in f):
            raise FormatError("facet %r is not a list of integers" % (f,))
        for v in f:
            if not 0 <= v < n:
                raise FormatError("facet vertex %d outside table of size %d"
                                  % (v, n))
    return facets


def complex_from_json(text: str) -> SimplicialComplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("invalid JSON: %s" % exc) from None
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise FormatError("expected an object with a 'vertices' field")
    vertices = doc["vertices"]
    if not isinstance(vertices, list):
        raise FormatError("field 'vertices' must be a list of labels")
    n = len(vertices)
    facets = _parse_facets(doc, n)
    try:
        return make_complex(facets, allow_void=True, vertex_count=n,
                            labels=[str(v) for v in vertices])
    except ComplexError as exc:
        raise FormatError(str(exc)) from None


def partitioned_to_json(px: PartitionedComplex) -> str:
    X = px.complex
    labels = list(X.labels) if X.labels is not None else \
        ["v%d" % i for i in range(X.vertex_count)]
    return _canon_dumps({"vertices": [str(l) for l in labels],
                         "facets": _sorted_facets(X),
                         "parts": [list(p) for p in px.parts]})


def partitioned_from_json(text: str) -> PartitionedComplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("invalid JSON: %s" % exc) from None
    if not isinstance(doc, dict) or "parts" not in doc:
        raise FormatError("expected an object with a 'parts' field")
    X = complex_from_json(json.dumps(
        {"vertices": doc.get("vertices", []),
         "facets": doc.get("facets", [])}))
    parts = doc["parts"]
    if not isinstance(parts, list) or not all(
            isinstance(p, list) and all(isinstance(v, int) for v in p)
            for p in parts):
        raise FormatError("field 'parts' must be a list of vertex-id lists")
    try:
        return make_partitioned(X, parts)
    except ComplexError as exc:
        raise FormatError(str(exc)) from None


def _rational_str(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_rational(s) -> Fraction:
    try:
        value = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise FormatError("malformed rational %r" % (s,)) from None
    return value


def family_to_json(d, members) -> str:
    """members: ordered mapping name -> list of Box."""
    out = {}
    for name, boxes in members.items():
        out[str(name)] = [[[_rational_str(lo), _rational_str(hi)]
                           for lo, hi in b.intervals] for b in boxes]
    return _canon_dumps({"d": d, "members": out})


def family_from_json(text: str):
    """Returns (d, {name: [Box, ...]})."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("invalid JSON: %s" % exc) from None
    if not isinstance(doc, dict) or "d" not in doc or "members" not in doc:
        raise FormatError("expected an object with 'd' and 'members' fields")
    d = doc["d"]
    if not isinstance(d, int) or d < 1:
        raise FormatError("field 'd' must be a positive integer")
    members = {}
    for name, boxes in doc["members"].items():
        if not isinstance(boxes, list):
            raise FormatError("member %r must be a list of boxes" % (name,))
        parsed = []
        for b in boxes:
            if not isinstance(b, list) or len(b) != d:
                raise FormatError("box %r of member %r must have %d axes"
                                  % (b, name, d))
            try:
                parsed.append(make_box(
                    [(parse_rational(lo), parse_rational(hi))
                     for lo, hi in b]))
            except (FamilyError, TypeError, ValueError) as exc:
                raise FormatError("bad box in member %r: %s"
                                  % (name, exc)) from None
        members[str(name)] = parsed
    return d, members


def grouped_box_family_to_json(fr) -> str:
    members = {g: [fr.base.members[p] for p in pieces]
               for g, pieces in fr.groups}
    return family_to_json(fr.dimension, members)
