"""Named invariant suites over a single polytope, used by the CLI.

Each check returns a CheckResult; a suite is a list of them. Everything is
deterministic for a fixed seed and independent of the degree of parallelism.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import boundary as bd
from . import classify as cl
from . import ehrhart as eh
from . import homology as hm
from . import sheaf as sh
from .linalg import dot
from .polytope import FaceLattice


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


SUITES = ("all", "combinatorics", "ehrhart", "cohomology", "classify")


def _check(results: list[CheckResult], name: str, passed: bool, detail: str = "") -> None:
    results.append(CheckResult(name, bool(passed), detail))


# ---------------------------------------------------------------------------


def combinatorics_suite(lattice: FaceLattice) -> list[CheckResult]:
    out: list[CheckResult] = []
    poly = lattice.polytope
    n = poly.dim

    # facet irredundancy on a box around the polytope
    box = [
        range(-3, max(hi for _, hi in poly.bounding_box()) + 4)
        for _ in range(n)
    ]
    irredundant = True
    full = {
        x for x in product(*box) if all(f.value(x) >= 0 for f in poly.facets)
    }
    for skip in range(len(poly.facets)):
        relaxed = {
            x
            for x in product(*box)
            if all(f.value(x) >= 0 for i, f in enumerate(poly.facets) if i != skip)
        }
        if relaxed == full:
            irredundant = False
    _check(out, "facet irredundancy", irredundant)

    euler = sum((-1) ** lattice.face(f).dim for f in lattice.proper_ids())
    _check(out, "Euler relation", euler == 1 + (-1) ** (n - 1), f"sum={euler}")

    ids = [f.id for f in lattice.faces]
    ok = all(lattice.join(a, b) == lattice.join(b, a) for a in ids for b in ids)
    ok = ok and all(lattice.join(a, a) == a for a in ids)
    ok = ok and all(
        lattice.join(lattice.join(a, b), c) == lattice.join(a, lattice.join(b, c))
        for a in ids
        for b in ids
        for c in ids
    )
    _check(out, "join is a semilattice operation", ok)

    galois = True
    for f in lattice.faces:
        vs = frozenset(
            i
            for i in range(len(poly.vertices))
            if all(i in lattice.facet_members[c] for c in f.facet_set)
        )
        galois = galois and vs == f.vertex_set
    _check(out, "vertex/facet Galois correspondence", galois)

    modes_agree = True
    ops = (bd.star, bd.closed_star, bd.open_antistar, bd.closed_antistar, bd.link)
    for a in lattice.proper_ids():
        for op in ops:
            if op(lattice, a, "definitional").members != op(lattice, a, "combinatorial").members:
                modes_agree = False
    _check(out, "star/link/antistar: definitional = combinatorial", modes_agree)

    ast_closure = all(
        bd.closed_antistar(lattice, a).members == bd.closure(bd.open_antistar(lattice, a)).members
        for a in lattice.proper_ids()
    )
    _check(out, "closed antistar is the closure of the open antistar", ast_closure)

    link_eq = all(
        bd.link(lattice, a).members
        == bd.closed_star(lattice, a).members - bd.star(lattice, a).members
        == bd.closed_antistar(lattice, a).members - bd.open_antistar(lattice, a).members
        for a in lattice.proper_ids()
    )
    _check(out, "link = closed star minus star = closed antistar minus antistar", link_eq)

    star_in_link = True
    for a in lattice.proper_ids():
        for b in bd.star(lattice, a).members - {a}:
            lk_b = bd.link(lattice, b)
            lhs = bd.closed_star_within(lk_b, a).members
            rhs = frozenset(
                f
                for f in lk_b.members
                if not lattice.leq(b, lattice.join(f, a))
            )
            if a not in lk_b.members or lhs != rhs:
                star_in_link = False
    _check(out, "closed star inside a link via joins", star_in_link)

    filters = all(
        bd.is_order_filter(bd.star(lattice, a)) and bd.is_order_filter(bd.open_antistar(lattice, a))
        for a in lattice.proper_ids()
    )
    fixed = all(
        bd.is_subcomplex(bd.closed_star(lattice, a))
        and bd.is_subcomplex(bd.closed_antistar(lattice, a))
        and bd.is_subcomplex(bd.link(lattice, a))
        for a in lattice.proper_ids()
    )
    _check(out, "stars/antistars are filters, closed sets are subcomplexes", filters and fixed)

    _check(
        out,
        "boundary nerve has sphere homology",
        hm.has_sphere_homology(bd.nerve(bd.boundary_complex(lattice)), n - 1),
    )

    dcx = hm.face_cochain_complex(lattice)
    point = True
    for ring in ("Z", "Q", "Z/2", "Z/3"):
        res = hm.cohomology(dcx, ring)
        point = point and res.free_rank(0) == 1 and not res.has_torsion()
        point = point and all(res.free_rank(d) == 0 for d in range(1, n + 1))
    _check(out, "face cochain complex has point cohomology over Z, Q, Z/2, Z/3", point)
    return out


# ---------------------------------------------------------------------------


def ehrhart_suite(lattice: FaceLattice) -> list[CheckResult]:
    out: list[CheckResult] = []
    poly = lattice.polytope
    n = poly.dim
    ehr = eh.ehrhart_polynomial(poly)
    extrapolates = all(
        ehr.value_at_integer(k) == eh.count_points(poly, k) for k in range(n + 3)
    )
    _check(out, "interpolation matches counts up to n+2", extrapolates)
    _check(out, "Ehrhart reciprocity up to n+2", eh.reciprocity_check(poly, n + 2))
    roots = ehr.integral_roots()
    _check(
        out,
        "integral roots form a consecutive block",
        set(roots) == {-j for j in range(1, len(roots) + 1)},
        f"roots={roots}",
    )
    try:
        k = eh.splitting_index(poly)
        _check(out, "splitting index: both computations agree", True, f"k={k}")
    except ArithmeticError as err:
        _check(out, "splitting index: both computations agree", False, str(err))
    return out


# ---------------------------------------------------------------------------


def classify_suite(lattice: FaceLattice, seed: int = 0, viewpoints: int = 4) -> list[CheckResult]:
    out: list[CheckResult] = []
    poly = lattice.polytope
    n = poly.dim
    for kind in cl.KINDS:
        halves_ok = True
        homology_ok = True
        rays_ok = True
        for x in cl.sample_viewpoints(poly, kind, count=viewpoints, seed=seed):
            c = cl.classify(lattice, kind, x)
            halves_ok = halves_ok and c.filter_side.members and c.complex_side.members
            halves_ok = halves_ok and bd.is_order_filter(c.filter_side)
            halves_ok = halves_ok and bd.is_subcomplex(c.complex_side)
            halves_ok = (
                halves_ok
                and c.filter_side.members | c.complex_side.members == lattice.proper_ids()
                and not c.filter_side.members & c.complex_side.members
            )
            halves_ok = (
                halves_ok
                and c.boundary.members
                == bd.closure(c.filter_side).members & c.complex_side.members
            )
            homology_ok = homology_ok and hm.is_reduced_acyclic(bd.nerve(c.filter_side))
            homology_ok = homology_ok and hm.is_reduced_acyclic(bd.nerve(c.complex_side))
            homology_ok = homology_ok and hm.is_reduced_acyclic(
                bd.nerve(bd.closure(c.filter_side))
            )
            if n >= 2:
                homology_ok = homology_ok and hm.has_sphere_homology(
                    bd.nerve(c.boundary), n - 2
                )
            for fid in lattice.proper_ids():
                if not cl.definitional_check(lattice, kind, x, fid, samples=2, seed=seed):
                    rays_ok = False
        _check(out, f"{kind}: partition structure", bool(halves_ok))
        _check(out, f"{kind}: ball/sphere homology of nerves", bool(homology_ok))
        _check(out, f"{kind}: ray definition consistent", bool(rays_ok))
    vis_sign = True
    for x in cl.sample_viewpoints(poly, "visibility", count=viewpoints, seed=seed):
        c = cl.classify_visibility(lattice, x)
        for i, f in enumerate(poly.facets):
            fid = lattice.face_by_vertices(lattice.facet_members[i])
            vis_sign = vis_sign and ((fid in c.filter_side.members) == (f.value(x) >= 0))
    _check(out, "facet visibility equals the sign test", vis_sign)
    return out


# ---------------------------------------------------------------------------


def cohomology_suite(lattice: FaceLattice, seed: int = 0) -> list[CheckResult]:
    out: list[CheckResult] = []
    poly = lattice.polytope
    n = poly.dim
    ehr = eh.ehrhart_polynomial(poly)

    grid_ok = True
    box = [range(-3, 5) for _ in range(n)]
    for k in range(-2, 3):
        for x in product(*box):
            for f in lattice.faces:
                if sh.twist_membership(lattice, k, f.id, x) != sh.membership_oracle(
                    lattice, k, f.id, x
                ):
                    grid_ok = False
    _check(out, "twist membership formula equals LP oracle on the grid", grid_ok)

    closed_form = True
    contributors_ok = True
    for k in range(-3, 4):
        expect_rank = abs(ehr.value_at_integer(k))
        expect_deg = 0 if k >= 0 else n
        expected_contrib = sh.expected_contributors(lattice, k)
        for ring in ("Z", "Q", "Z/2", "Z/3"):
            g = sh.global_cohomology(lattice, k, ring, margin=2)
            concentrated = all(
                g.free_rank(d) == 0 for d in range(n + 1) if d != expect_deg
            )
            closed_form = (
                closed_form
                and g.shell_certified
                and not g.has_torsion()
                and concentrated
                and g.free_rank(expect_deg) == expect_rank
            )
            if ring == "Z":
                contributors_ok = contributors_ok and g.contributors == expected_contrib
    _check(out, "global cohomology matches |E(k)| in one degree, torsion-free", closed_form)
    _check(out, "contributors are exactly the (interior) dilate points", contributors_ok)

    cross_ok = True
    neg_poly = sh.negate_polytope(poly)
    for k in (1, 0, -1):
        box_k = sh.scan_box(poly, k, 2)
        for x in product(*(range(lo, hi + 1) for lo, hi in box_k)):
            if k == 1 and poly.contains(x):
                continue
            if k == 0 and all(c == 0 for c in x):
                continue
            if k == -1 and neg_poly.contains(x, strict=True):
                continue
            if not sh.classification_crosscheck(lattice, k, x):
                cross_ok = False
    _check(out, "twist face sets match the classifications for k in {1,0,-1}", cross_ok)

    dedup_ok = True
    monotone_ok = True
    seen: dict[tuple, frozenset] = {}
    for x in product(*(range(lo, hi + 1) for lo, hi in sh.scan_box(poly, 1, 2))):
        ts = sh.twist_face_set(lattice, 1, x)
        sig = tuple(
            0 if v == 0 else (1 if v > 0 else -1)
            for v in (dot(x, f.normal) + 1 * f.offset for f in poly.facets)
        )
        if sig in seen:
            dedup_ok = dedup_ok and seen[sig] == ts.members
        else:
            seen[sig] = ts.members
        for fid in ts.members:
            monotone_ok = monotone_ok and lattice.above(fid) <= ts.members
    _check(out, "equal facet-sign vectors give equal twist face sets", dedup_ok)
    _check(out, "twist face sets are upward closed", monotone_ok)
    return out


# ---------------------------------------------------------------------------


def run_suite(lattice: FaceLattice, suite: str, seed: int = 0) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    out: list[CheckResult] = []
    if suite in ("all", "combinatorics"):
        out.extend(combinatorics_suite(lattice))
    if suite in ("all", "ehrhart"):
        out.extend(ehrhart_suite(lattice))
    if suite in ("all", "classify"):
        out.extend(classify_suite(lattice, seed=seed))
    if suite in ("all", "cohomology"):
        out.extend(cohomology_suite(lattice, seed=seed))
    return out
