"""Viewpoint and direction partitions of the boundary complex.

Three partitions of the proper faces: visible/invisible from an outside
point, front/back with respect to a point off the interior, and lower/upper
with respect to a nonzero direction. Each one is decided by exact facet sign
tests; the ray-based definitions are kept as a sampled cross-check oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .boundary import FaceSubset, closure
from .linalg import dot, vec_sub
from .polytope import FaceLattice

KINDS = ("visibility", "frontback", "lowerupper")

LAMBDA_GRID = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(8))


@dataclass(frozen=True)
class Classification:
    """One partition of the boundary complex.

    ``filter_side`` is the order-filter half (Inv / Front / Up),
    ``complex_side`` is the subcomplex half (Vis / Back / Low), and
    ``boundary`` is their interface: closure(filter) intersected with the
    complex side.
    """

    kind: str
    point: tuple
    filter_side: FaceSubset
    complex_side: FaceSubset
    boundary: FaceSubset


def _faces_meeting(lattice: FaceLattice, facet_ids: set[int]) -> frozenset[int]:
    """Proper faces contained in at least one of the given facets."""
    return frozenset(
        f.id
        for f in lattice.faces
        if f.id != lattice.top_id and f.facet_set & facet_ids
    )


def _partition(lattice, kind, x, complex_facets) -> Classification:
    complex_members = _faces_meeting(lattice, complex_facets)
    filter_members = lattice.proper_ids() - complex_members
    filter_side = FaceSubset(lattice, filter_members)
    complex_side = FaceSubset(lattice, complex_members)
    bd = closure(filter_side).intersection(complex_side)
    return Classification(kind, tuple(x), filter_side, complex_side, bd)


def classify_visibility(lattice: FaceLattice, x) -> Classification:
    """Visible faces lie in a facet whose inequality the viewpoint violates."""
    poly = lattice.polytope
    if poly.contains(x):
        raise ValueError("viewpoint inside polytope")
    visible = {i for i, f in enumerate(poly.facets) if f.value(x) < 0}
    return _partition(lattice, "visibility", x, visible)


def classify_front_back(lattice: FaceLattice, x) -> Classification:
    """Back faces lie in a facet keeping the point on its positive side."""
    poly = lattice.polytope
    if poly.contains(x, strict=True):
        raise ValueError("point inside the interior")
    back = {i for i, f in enumerate(poly.facets) if f.value(x) > 0}
    return _partition(lattice, "frontback", x, back)


def classify_lower_upper(lattice: FaceLattice, x) -> Classification:
    """Lower faces lie in a facet whose inward normal has positive pairing with x."""
    poly = lattice.polytope
    if all(c == 0 for c in x):
        raise ValueError("zero direction")
    lower = {i for i, f in enumerate(poly.facets) if dot(x, f.normal) > 0}
    return _partition(lattice, "lowerupper", x, lower)


def classify(lattice: FaceLattice, kind: str, x) -> Classification:
    if kind == "visibility":
        return classify_visibility(lattice, x)
    if kind == "frontback":
        return classify_front_back(lattice, x)
    if kind == "lowerupper":
        return classify_lower_upper(lattice, x)
    raise ValueError(f"unknown classification kind {kind!r}")


# ---------------------------------------------------------------------------
# ray-based cross-check


def _ray_parameter_interval(poly, p, d):
    """Whether {lam > 0 : p + lam*d in P} is non-empty, decided exactly.

    Each facet restricts lam to a rational half-line or interval; the
    intersection is tracked as (lower bound, open?) / (upper bound, open?).
    """
    lo, lo_open = Fraction(0), True
    hi, hi_open = None, False
    for f in poly.facets:
        c = f.value(p)
        s = dot(d, f.normal)
        if s == 0:
            if c < 0:
                return False
            continue
        bound = Fraction(-c, s)
        if s > 0:
            if bound > lo:
                lo, lo_open = bound, False
        else:
            if hi is None or bound < hi:
                hi, hi_open = bound, False
    if hi is None:
        return True
    if lo < hi:
        return True
    return lo == hi and not lo_open and not hi_open


def _sample_points(lattice, fid, samples, rng):
    """Vertices, barycenter and random rational convex combinations of a face."""
    coords = lattice.vertex_coords(fid)
    pts = [tuple(Fraction(c) for c in v) for v in coords]
    pts.append(lattice.barycenter(fid))
    n = lattice.polytope.dim
    for _ in range(samples):
        weights = [rng.randint(0, 6) for _ in coords]
        if sum(weights) == 0:
            weights = [1] * len(coords)
        total = sum(weights)
        pts.append(
            tuple(
                Fraction(sum(w * v[i] for w, v in zip(weights, coords)), total)
                for i in range(n)
            )
        )
    return pts


def definitional_check(
    lattice: FaceLattice, kind: str, x, fid: int, samples: int = 4, seed: int = 0
) -> bool:
    """Consistency of the facet-sign classification with the ray definition.

    Rays are sampled at the face's vertices, barycenter and random rational
    convex combinations. Points on the fixed parameter grid (1/2, 1, 2, 8)
    are tested directly, and emptiness of the full rational parameter range
    is decided exactly, so a face on the escaping side must never re-enter
    and a face on the other side must exhibit a re-entry witness.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown classification kind {kind!r}")
    cls = classify(lattice, kind, x)
    poly = lattice.polytope
    on_complex_side = fid in cls.complex_side
    rng = random.Random(seed)
    xq = tuple(Fraction(c) for c in x)
    hits = []
    for p in _sample_points(lattice, fid, samples, rng):
        if kind == "visibility":
            d = vec_sub(xq, p)
        elif kind == "frontback":
            d = vec_sub(p, xq)
        else:
            d = tuple(-c for c in xq)
        hit = _ray_parameter_interval(poly, p, d)
        grid_hit = any(
            poly.contains(tuple(pi + lam * di for pi, di in zip(p, d)))
            for lam in LAMBDA_GRID
        )
        if grid_hit and not hit:
            raise AssertionError("grid sample contradicts exact ray interval")
        hits.append(hit)
    if on_complex_side:
        # visible / back / lower: every sampled ray must leave immediately
        return not any(hits)
    return any(hits)


# ---------------------------------------------------------------------------
# deterministic viewpoint sampling (shared by the verification suites)


def sample_viewpoints(poly, kind: str, count: int = 8, seed: int = 0) -> list[tuple]:
    """Deterministic rational sample points in the domain of a classification."""
    n = poly.dim
    rng = random.Random(f"{seed}:{kind}:{poly.vertices}")
    box = poly.bounding_box()
    out: list[tuple] = []
    seen = set()

    def push(x) -> None:
        if len(out) >= count or x in seen:
            return
        try:
            if kind == "visibility" and poly.contains(x):
                return
            if kind == "frontback" and poly.contains(x, strict=True):
                return
            if kind == "lowerupper" and all(c == 0 for c in x):
                return
        except ValueError:
            return
        seen.add(x)
        out.append(x)

    if kind == "lowerupper":
        for i in range(n):
            unit = tuple(Fraction(int(i == j)) for j in range(n))
            push(unit)
            push(tuple(-c for c in unit))
        push(tuple(Fraction(1) for _ in range(n)))
    else:
        for i in range(n):
            lo, hi = box[i]
            push(tuple(Fraction(hi + 2) if j == i else Fraction(lo) for j in range(n)))
            push(tuple(Fraction(lo - 2) if j == i else Fraction(hi) for j in range(n)))
        push(tuple(Fraction(hi + 1) for _, hi in box))
        if kind == "frontback":
            for v in poly.vertices[:2]:
                push(tuple(Fraction(c) for c in v))
    guard = 0
    while len(out) < count and guard < 1000:
        guard += 1
        cand = tuple(
            Fraction(rng.randint(-12, 12), rng.choice((1, 2, 3))) for _ in range(n)
        )
        push(cand)
    if len(out) < count:
        raise RuntimeError("could not sample enough viewpoints")
    return out
