"""Lattice-point graded pieces of twisted structure sheaves and their
cohomology on the toric variety of a polytope.

For a twist k and a lattice point x, the faces F with x in C_F + kF (barrier
cone translated by the dilated face) select a subcomplex of the face cochain
complex. Its cohomology is the x-graded piece of H^*(X; F(k)); summing over a
certified box of lattice points gives the global answer.

Membership is decided two ways: by facet inequalities (fast formula) and by
an LP oracle on the barrier-cone generators (independent of the facet data),
so the formula is testable against the oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .classify import classify_front_back, classify_lower_upper, classify_visibility
from .ehrhart import dilate_contains
from .homology import (
    CohomologyResult,
    IntegerChainComplex,
    cohomology,
    face_cochain_complex,
    restrict_cochain_complex,
)
from .linalg import dot, vec_neg, vec_sub
from .lp import cone_contains, dual_cone_rays
from .parallel import parallel_map
from .polytope import FaceLattice, face_lattice, negate_polytope

DISTANT_POINT_COUNT = 32
DISTANT_COORD_BOUND = 50


@dataclass(frozen=True)
class TwistFaceSet:
    """Faces F with x in C_F + kF; always contains the top face, upward closed."""

    k: int
    x: tuple[int, ...]
    members: frozenset[int]


@dataclass(frozen=True)
class GradedPiece:
    base: TwistFaceSet
    complex: IntegerChainComplex


@dataclass(frozen=True)
class GlobalCohomology:
    """Sum of the graded pieces over a margin-certified scan box."""

    k: int
    ring: str
    free: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    contributors: tuple[tuple[tuple[int, ...], int], ...]
    scan_box: tuple[tuple[int, int], ...]
    shell_certified: bool

    def free_rank(self, degree: int) -> int:
        return self.free[degree] if 0 <= degree < len(self.free) else 0

    def has_torsion(self) -> bool:
        return any(self.torsion)

    def total_rank(self) -> int:
        return sum(self.free)

    def nonzero_degrees(self) -> tuple[int, ...]:
        return tuple(d for d in range(len(self.free)) if self.free[d] or self.torsion[d])


def twist_membership(lattice: FaceLattice, k: int, fid: int, x) -> bool:
    """Whether x lies in C_F + kF, via the facet inequalities through F.

    Each facet containing F contributes <x, normal> + k*offset >= 0; the top
    face has no facets and accepts everything.
    """
    face = lattice.face(fid)
    poly = lattice.polytope
    for i in face.facet_set:
        f = poly.facets[i]
        if dot(x, f.normal) + k * f.offset < 0:
            return False
    return True


def _barrier_cone_rays(lattice: FaceLattice, fid: int):
    rays = lattice._cache.setdefault("barrier_rays", {})
    if fid not in rays:
        poly = lattice.polytope
        fverts = lattice.vertex_coords(fid)
        gens = {vec_sub(p, f) for p in poly.vertices for f in fverts}
        gens.discard(tuple(0 for _ in range(poly.dim)))
        rays[fid] = (tuple(sorted(gens)), dual_cone_rays(gens, poly.dim))
    return rays[fid]


def membership_oracle(lattice: FaceLattice, k: int, fid: int, x, use_rays: bool = True) -> bool:
    """Whether x lies in C_F + kF, via the generator description of C_F.

    C_F is the cone spanned by all vertex differences P - F, and kF + C_F
    equals k*v + C_F for any vertex v of F (F - F lies in C_F). Membership of
    x - k*v in the cone is decided by Farkas duality: either through the
    cached extreme rays of the dual cone, or through a fresh Fourier-Motzkin
    feasibility run.
    """
    poly = lattice.polytope
    v0 = lattice.lex_min_vertex(fid)
    y = tuple(xi - k * vi for xi, vi in zip(x, v0))
    gens, rays = _barrier_cone_rays(lattice, fid)
    if use_rays:
        return all(dot(y, r) >= 0 for r in rays)
    return cone_contains(gens, y)


def twist_face_set(lattice: FaceLattice, k: int, x) -> TwistFaceSet:
    members = frozenset(
        f.id for f in lattice.faces if twist_membership(lattice, k, f.id, x)
    )
    ts = TwistFaceSet(k, tuple(x), members)
    _check_upward_closed(lattice, ts)
    return ts


def _check_upward_closed(lattice: FaceLattice, ts: TwistFaceSet) -> None:
    for fid in ts.members:
        if not lattice.above(fid) <= ts.members:
            raise RuntimeError(f"twist face set at {ts.x} is not upward closed")


def graded_piece(lattice: FaceLattice, k: int, x) -> GradedPiece:
    """Subcomplex of the face cochain complex spanned by the faces seeing x."""
    base = twist_face_set(lattice, k, x)
    ambient = face_cochain_complex(lattice)
    return GradedPiece(base, restrict_cochain_complex(ambient, base.members))


def graded_cohomology(lattice: FaceLattice, k: int, x, ring: str = "Z") -> CohomologyResult:
    return cohomology(graded_piece(lattice, k, x).complex, ring)


# ---------------------------------------------------------------------------
# cross-checks against the face classifications


def _negated_lattice(lattice: FaceLattice) -> tuple[FaceLattice, dict[int, int]]:
    cached = lattice._cache.get("negated")
    if cached is not None:
        return cached
    neg = face_lattice(negate_polytope(lattice.polytope))
    neg_index = {v: i for i, v in enumerate(neg.polytope.vertices)}
    mapping = {}
    for f in lattice.faces:
        nvs = frozenset(
            neg_index[vec_neg(lattice.polytope.vertices[i])] for i in f.vertex_set
        )
        nid = neg.face_by_vertices(nvs)
        if nid is None:
            raise RuntimeError("face negation did not land on a face")
        mapping[f.id] = nid
    lattice._cache["negated"] = (neg, mapping)
    return neg, mapping


def classification_crosscheck(lattice: FaceLattice, k: int, x) -> bool:
    """Whether the twist face set matches its classification description.

    k = 1: proper members are the faces invisible from x (x outside P);
    k = 0: proper members are the upper faces for the direction -x (x != 0);
    k = -1: a face is a proper member exactly when its negative is a front
    face of -P seen from x (x outside the interior of -P).
    """
    poly = lattice.polytope
    proper_members = twist_face_set(lattice, k, x).members - {lattice.top_id}
    if k == 1:
        if poly.contains(x):
            raise ValueError("crosscheck for k=1 needs x outside P")
        return proper_members == classify_visibility(lattice, x).filter_side.members
    if k == 0:
        if all(c == 0 for c in x):
            raise ValueError("crosscheck for k=0 needs x != 0")
        expected = classify_lower_upper(lattice, vec_neg(x)).filter_side.members
        return proper_members == expected
    if k == -1:
        neg, mapping = _negated_lattice(lattice)
        if neg.polytope.contains(x, strict=True):
            raise ValueError("crosscheck for k=-1 needs x outside the interior of -P")
        front = classify_front_back(neg, x).filter_side.members
        return {mapping[f] for f in proper_members} == front
    raise ValueError("crosscheck is defined for k in {1, 0, -1}")


# ---------------------------------------------------------------------------
# global cohomology over a certified box


def scan_box(poly, k: int, margin: int) -> tuple[tuple[int, int], ...]:
    """Bounding box of kP (unit box around 0 for k = 0), inflated by margin."""
    if k == 0:
        return tuple((-1 - margin, 1 + margin) for _ in range(poly.dim))
    out = []
    for lo, hi in poly.bounding_box():
        a, b = sorted((k * lo, k * hi))
        out.append((a - margin, b + margin))
    return tuple(out)


def _signature(poly, k: int, x) -> tuple[bool, ...]:
    return tuple(dot(x, f.normal) + k * f.offset >= 0 for f in poly.facets)


def _face_set_from_signature(lattice: FaceLattice, sig) -> frozenset[int]:
    return frozenset(
        f.id for f in lattice.faces if all(sig[i] for i in f.facet_set)
    )


def _class_complexes(lattice: FaceLattice, k: int) -> dict:
    return lattice._cache.setdefault(("twist_classes", k), {})


def _graded_result(lattice, k, x, ring, class_cache) -> CohomologyResult:
    sig = _signature(lattice.polytope, k, x)
    entry = class_cache.get(sig)
    if entry is None:
        members = _face_set_from_signature(lattice, sig)
        complex_ = restrict_cochain_complex(face_cochain_complex(lattice), members)
        entry = {"complex": complex_, "results": {}}
        class_cache[sig] = entry
    results = entry["results"]
    if ring not in results:
        results[ring] = cohomology(entry["complex"], ring)
    return results[ring]


def _prefill_classes(lattice, k, ring, points, class_cache) -> None:
    """Evaluate all missing facet-sign classes, possibly on a thread pool.

    Workers touch disjoint signatures and the merge is ordered, so reports
    are identical for every degree of parallelism.
    """
    poly = lattice.polytope
    face_cochain_complex(lattice)  # materialise the shared ambient complex first
    todo = []
    seen = set()
    for x in points:
        sig = _signature(poly, k, x)
        if sig in seen:
            continue
        seen.add(sig)
        entry = class_cache.get(sig)
        if entry is None or ring not in entry["results"]:
            todo.append(sig)

    def build(sig):
        entry = class_cache.get(sig)
        if entry is None:
            members = _face_set_from_signature(lattice, sig)
            complex_ = restrict_cochain_complex(face_cochain_complex(lattice), members)
            entry = {"complex": complex_, "results": {}}
        return sig, entry, cohomology(entry["complex"], ring)

    for sig, entry, result in parallel_map(build, todo):
        entry["results"][ring] = result
        class_cache[sig] = entry


def global_cohomology(
    lattice: FaceLattice, k: int, ring: str = "Z", margin: int = 2
) -> GlobalCohomology:
    """Degreewise sum of the graded cohomology over all lattice points.

    The scan covers the inflated bounding box of kP; every point on the
    outermost shell, and a fixed set of pseudo-random distant points, must be
    acyclic, which certifies that no contributor was missed.
    """
    if margin < 1:
        raise ValueError("margin must be at least 1")
    poly = lattice.polytope
    n = poly.dim
    box = scan_box(poly, k, margin)
    class_cache = _class_complexes(lattice, k)
    box_points = list(product(*(range(lo, hi + 1) for lo, hi in box)))
    _prefill_classes(lattice, k, ring, box_points, class_cache)
    free = [0] * (n + 1)
    torsion: list[list[int]] = [[] for _ in range(n + 1)]
    contributors = []
    for x in box_points:
        res = _graded_result(lattice, k, x, ring, class_cache)
        on_shell = any(xi in (lo, hi) for xi, (lo, hi) in zip(x, box))
        if on_shell and not res.is_trivial():
            raise RuntimeError("margin too small: scan shell is not acyclic")
        for d in range(n + 1):
            fr = res.free_rank(d)
            tor = res.torsion_at(d)
            if fr or tor:
                free[d] += fr
                torsion[d].extend(tor)
                contributors.append((x, d))
    rng = random.Random(f"distant:{k}:{poly.vertices}")
    checked = 0
    while checked < DISTANT_POINT_COUNT:
        x = tuple(
            rng.randint(-DISTANT_COORD_BOUND, DISTANT_COORD_BOUND) for _ in range(n)
        )
        if all(lo <= xi <= hi for xi, (lo, hi) in zip(x, box)):
            continue
        if not _graded_result(lattice, k, x, ring, class_cache).is_trivial():
            raise RuntimeError("distant lattice point is not acyclic")
        checked += 1
    return GlobalCohomology(
        k,
        ring,
        tuple(free),
        tuple(tuple(sorted(t)) for t in torsion),
        tuple(sorted(contributors)),
        box,
        True,
    )


def expected_contributors(lattice: FaceLattice, k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Contributors the closed form predicts: kP points in degree 0 for k >= 0,
    interior points of kP in degree n for k < 0."""
    poly = lattice.polytope
    n = poly.dim
    box = scan_box(poly, k, 1)
    out = []
    for x in product(*(range(lo, hi + 1) for lo, hi in box)):
        if k >= 0:
            if dilate_contains(poly, k, x):
                out.append((x, 0))
        elif dilate_contains(poly, k, x, strict=True):
            out.append((x, n))
    return tuple(sorted(out))
