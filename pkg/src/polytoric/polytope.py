"""Full-dimensional lattice polytopes: facet inequalities and the face lattice.

A polytope is built from its integer vertices; facets are found by brute
force over point subsets spanning supporting hyperplanes, which is fine at
the intended scale (few dozen vertices, ambient dimension <= 4). Faces are
the intersections of facet vertex sets, graded by affine dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import dot, kernel_line, rank_rational, vec_neg, vec_sub


@dataclass(frozen=True)
class Facet:
    """Inequality <x, normal> + offset >= 0 with a primitive inward normal."""

    normal: tuple[int, ...]
    offset: int

    def value(self, x: Sequence):
        return dot(x, self.normal) + self.offset


@dataclass(frozen=True)
class LatticePolytope:
    dim: int
    vertices: tuple[tuple[int, ...], ...]
    facets: tuple[Facet, ...]
    discarded: tuple[tuple[int, ...], ...] = ()

    def contains(self, x: Sequence, strict: bool = False) -> bool:
        """Membership test; strict means the topological interior."""
        if len(x) != self.dim:
            raise ValueError("point has wrong dimension")
        for f in self.facets:
            v = f.value(x)
            if v < 0 or (strict and v == 0):
                return False
        return True

    def bounding_box(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (min(v[i] for v in self.vertices), max(v[i] for v in self.vertices))
            for i in range(self.dim)
        )


def _check_integer_point(p: Sequence, dim: int | None) -> tuple[int, ...]:
    tp = tuple(p)
    if dim is not None and len(tp) != dim:
        raise ValueError("points of mixed dimension")
    out = []
    for x in tp:
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"non-integral coordinate {x}")
            x = x.numerator
        if not isinstance(x, int):
            raise ValueError(f"non-integer coordinate {x!r}")
        out.append(x)
    return tuple(out)


def _enumerate_facets(points: list[tuple[int, ...]], n: int) -> list[Facet]:
    found = {}
    for subset in combinations(points, n):
        base = subset[0]
        diffs = [vec_sub(q, base) for q in subset[1:]]
        normal = kernel_line(diffs, n)
        if normal is None:
            continue
        level = dot(base, normal)
        sides = [dot(p, normal) - level for p in points]
        if all(s >= 0 for s in sides):
            inward = normal
        elif all(s <= 0 for s in sides):
            inward = vec_neg(normal)
        else:
            continue
        found[(inward, -dot(base, inward))] = None
    return [Facet(nrm, off) for nrm, off in sorted(found)]


def build_polytope(points: Iterable[Sequence[int]]) -> LatticePolytope:
    """Convex hull of integer points; the hull must be full-dimensional.

    Input points that are not vertices of the hull are dropped and recorded
    in ``discarded``. Raises ValueError for degenerate input.
    """
    dedup: list[tuple[int, ...]] = []
    seen = set()
    dim = None
    for p in points:
        tp = _check_integer_point(p, dim)
        dim = len(tp)
        if tp not in seen:
            seen.add(tp)
            dedup.append(tp)
    if dim is None:
        raise ValueError("no points given")
    if len(dedup) < dim + 1:
        raise ValueError(f"need at least {dim + 1} distinct points in dimension {dim}")
    base = dedup[0]
    if rank_rational([vec_sub(p, base) for p in dedup[1:]]) < dim:
        raise ValueError("degenerate polytope: points do not affinely span the space")

    facets = _enumerate_facets(dedup, dim)
    vertices = []
    discarded = []
    for p in dedup:
        active = [f.normal for f in facets if f.value(p) == 0]
        if len(active) >= dim and rank_rational(active) == dim:
            vertices.append(p)
        else:
            discarded.append(p)
    vertices.sort()
    discarded.sort()

    poly = LatticePolytope(dim, tuple(vertices), tuple(facets), tuple(discarded))
    _validate(poly)
    return poly


def _validate(poly: LatticePolytope) -> None:
    for f in poly.facets:
        values = [f.value(v) for v in poly.vertices]
        if any(v < 0 for v in values):
            raise ValueError("facet inequality violated by a vertex")
        if not any(v > 0 for v in values):
            raise ValueError("facet does not support the polytope properly")
        on = [v for v, val in zip(poly.vertices, values) if val == 0]
        if rank_rational([vec_sub(p, on[0]) for p in on[1:]]) != poly.dim - 1:
            raise ValueError("supporting hyperplane does not span a facet")


def negate_polytope(poly: LatticePolytope) -> LatticePolytope:
    """The reflection -P through the origin."""
    return build_polytope([vec_neg(v) for v in poly.vertices])


# ---------------------------------------------------------------------------
# face lattice


@dataclass(frozen=True)
class Face:
    id: int
    vertex_set: frozenset[int]
    facet_set: frozenset[int]
    dim: int


class FaceLattice:
    """All non-empty faces of a polytope, graded by dimension.

    Faces are indexed in a fixed order (by dimension, then by vertex set), so
    face ids form a linear extension of the partial order. The join table is
    total: the join of two faces is the face cut out by their common facets.
    """

    def __init__(self, polytope: LatticePolytope):
        self.polytope = polytope
        n = polytope.dim
        verts = polytope.vertices
        all_ids = frozenset(range(len(verts)))
        facet_members = [
            frozenset(i for i, v in enumerate(verts) if f.value(v) == 0)
            for f in polytope.facets
        ]
        vertex_sets = {all_ids}
        frontier = {fm for fm in facet_members if fm}
        vertex_sets |= frontier
        while frontier:
            fresh = set()
            for vs in frontier:
                for fm in facet_members:
                    cap = vs & fm
                    if cap and cap not in vertex_sets:
                        fresh.add(cap)
            vertex_sets |= fresh
            frontier = fresh

        def face_dim(vs: frozenset[int]) -> int:
            pts = sorted(verts[i] for i in vs)
            return rank_rational([vec_sub(p, pts[0]) for p in pts[1:]])

        records = []
        for vs in vertex_sets:
            fs = frozenset(j for j, fm in enumerate(facet_members) if vs <= fm)
            records.append((face_dim(vs), tuple(sorted(vs)), vs, fs))
        records.sort(key=lambda r: (r[0], r[1]))
        self.faces = tuple(
            Face(i, vs, fs, d) for i, (d, _key, vs, fs) in enumerate(records)
        )
        self.top_id = len(self.faces) - 1
        self.facet_members = tuple(facet_members)
        self._by_vertex_set = {f.vertex_set: f.id for f in self.faces}
        self._above = tuple(
            frozenset(g.id for g in self.faces if f.vertex_set <= g.vertex_set)
            for f in self.faces
        )
        self._below = tuple(
            frozenset(g.id for g in self.faces if g.vertex_set <= f.vertex_set)
            for f in self.faces
        )
        self.hasse = tuple(
            (f.id, g.id)
            for f in self.faces
            for g in self.faces
            if f.dim + 1 == g.dim and f.vertex_set < g.vertex_set
        )
        self._join = {}
        for f in self.faces:
            for g in self.faces:
                common = f.facet_set & g.facet_set
                if common:
                    vs = frozenset.intersection(*(facet_members[c] for c in common))
                    jid = self._by_vertex_set[vs]
                else:
                    jid = self.top_id
                self._join[(f.id, g.id)] = jid
        self._cache: dict = {}

    # -- basic queries ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.faces)

    def face(self, fid: int) -> Face:
        if not 0 <= fid < len(self.faces):
            raise ValueError(f"no face with id {fid}")
        return self.faces[fid]

    def leq(self, a: int, b: int) -> bool:
        return b in self._above[a]

    def above(self, fid: int) -> frozenset[int]:
        return self._above[fid]

    def below(self, fid: int) -> frozenset[int]:
        return self._below[fid]

    def join(self, a: int, b: int) -> int:
        self.face(a)
        self.face(b)
        return self._join[(a, b)]

    def proper_ids(self) -> frozenset[int]:
        return frozenset(range(self.top_id))

    def faces_of_dim(self, d: int) -> tuple[int, ...]:
        return tuple(f.id for f in self.faces if f.dim == d)

    def face_by_vertices(self, vs: frozenset[int]) -> int | None:
        return self._by_vertex_set.get(frozenset(vs))

    def vertex_coords(self, fid: int) -> tuple[tuple[int, ...], ...]:
        verts = self.polytope.vertices
        return tuple(sorted(verts[i] for i in self.face(fid).vertex_set))

    def lex_min_vertex(self, fid: int) -> tuple[int, ...]:
        return self.vertex_coords(fid)[0]

    def barycenter(self, fid: int) -> tuple[Fraction, ...]:
        coords = self.vertex_coords(fid)
        m = len(coords)
        return tuple(Fraction(sum(c[i] for c in coords), m) for i in range(self.polytope.dim))

    def face_label(self, fid: int) -> str:
        f = self.face(fid)
        if fid == self.top_id:
            return "P"
        coords = self.vertex_coords(fid)
        if f.dim == 0:
            return f"vertex {coords[0]}"
        pts = ", ".join(str(c) for c in coords)
        return f"{f.dim}-face {{{pts}}}"


def face_lattice(polytope: LatticePolytope) -> FaceLattice:
    return FaceLattice(polytope)


def join(lattice: FaceLattice, a: int, b: int) -> int:
    """Smallest face containing both given faces."""
    return lattice.join(a, b)
