"""Chain complexes and their (co)homology over Z, Q and Z/p.

Two sources of complexes: the face cochain complex of a polytope (one basis
element per face, coboundaries given by incidence numbers) and simplicial
complexes of nerves. Integer matrices are interpreted over the requested
ring only when cohomology is computed; over Z the answer carries torsion,
read off the Smith normal form of the incoming coboundary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boundary import NerveComplex
from .linalg import (
    IntMatrix,
    coordinates_in_basis,
    det_sign,
    integer_row_basis,
    normalize_ring,
    rank_over_field,
    smith_normal_form,
    vec_sub,
)
from .polytope import FaceLattice


@dataclass(frozen=True)
class IntegerChainComplex:
    """Graded integer matrices d_j : C^j -> C^(j+1) with d d = 0.

    ``basis_labels[i]`` lists the generators in degree ``start_degree + i``;
    ``maps[i]`` has one row per generator of the next degree and one column
    per generator of degree ``start_degree + i``.
    """

    start_degree: int
    basis_labels: tuple[tuple, ...]
    maps: tuple[IntMatrix, ...]

    def __post_init__(self):
        if len(self.maps) != max(len(self.basis_labels) - 1, 0):
            raise ValueError("one map per consecutive degree pair is required")
        for i, m in enumerate(self.maps):
            if m.ncols != len(self.basis_labels[i]) or m.nrows != len(self.basis_labels[i + 1]):
                raise ValueError(f"map {i} has shape {m.nrows}x{m.ncols}, bases disagree")
        for i in range(len(self.maps) - 1):
            if not self.maps[i + 1].mul(self.maps[i]).is_zero():
                raise ValueError("orientation bug: d∘d != 0")

    @property
    def degrees(self) -> range:
        return range(self.start_degree, self.start_degree + len(self.basis_labels))

    def rank_in_degree(self, degree: int) -> int:
        i = degree - self.start_degree
        if 0 <= i < len(self.basis_labels):
            return len(self.basis_labels[i])
        return 0

    def map_out_of(self, degree: int) -> IntMatrix | None:
        i = degree - self.start_degree
        if 0 <= i < len(self.maps):
            return self.maps[i]
        return None

    def map_into(self, degree: int) -> IntMatrix | None:
        return self.map_out_of(degree - 1)


@dataclass(frozen=True)
class CohomologyResult:
    """Per-degree free ranks and torsion divisors (empty over a field)."""

    ring: str
    start_degree: int
    free: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def free_rank(self, degree: int) -> int:
        i = degree - self.start_degree
        if 0 <= i < len(self.free):
            return self.free[i]
        return 0

    def torsion_at(self, degree: int) -> tuple[int, ...]:
        i = degree - self.start_degree
        if 0 <= i < len(self.torsion):
            return self.torsion[i]
        return ()

    def has_torsion(self) -> bool:
        return any(self.torsion)

    def is_trivial(self) -> bool:
        return not any(self.free) and not self.has_torsion()

    def nonzero_degrees(self) -> tuple[int, ...]:
        return tuple(
            d
            for d in range(self.start_degree, self.start_degree + len(self.free))
            if self.free_rank(d) or self.torsion_at(d)
        )


def cohomology(complex_: IntegerChainComplex, ring: str = "Z") -> CohomologyResult:
    """Cohomology of the complex over Z, Q or Z/p.

    Over Z the free rank in degree j is dim ker(d_j) - rank(d_{j-1}) with
    ranks from Smith normal form, and the torsion divisors come from the
    incoming map. Over a field both numbers reduce to field ranks.
    """
    kind = normalize_ring(ring)
    snf_cache: dict[int, object] = {}

    def zrank(m: IntMatrix | None) -> int:
        if m is None or m.nrows == 0 or m.ncols == 0:
            return 0
        key = id(m)
        if key not in snf_cache:
            snf_cache[key] = smith_normal_form(m)
        return snf_cache[key].rank

    def frank(m: IntMatrix | None) -> int:
        if m is None or m.nrows == 0 or m.ncols == 0:
            return 0
        return rank_over_field(m, ring)

    free = []
    torsion = []
    for degree in complex_.degrees:
        n = complex_.rank_in_degree(degree)
        inc = complex_.map_into(degree)
        out = complex_.map_out_of(degree)
        if kind[0] == "Z":
            free.append(n - zrank(out) - zrank(inc))
            if inc is None or inc.nrows == 0 or inc.ncols == 0:
                torsion.append(())
            else:
                torsion.append(snf_cache[id(inc)].torsion())
        else:
            free.append(n - frank(out) - frank(inc))
            torsion.append(())
    return CohomologyResult(ring, complex_.start_degree, tuple(free), tuple(torsion))


# ---------------------------------------------------------------------------
# orientations and the face cochain complex


def orient_faces(lattice: FaceLattice) -> dict[int, tuple[tuple[int, ...], ...]]:
    """A deterministic integer basis of each face's direction space.

    The basis is the Hermite-style reduction of the difference vectors from
    the face's lexicographically least vertex; vertices get the empty basis.
    """
    cached = lattice._cache.get("orientations")
    if cached is not None:
        return cached
    out = {}
    for f in lattice.faces:
        coords = lattice.vertex_coords(f.id)
        v0 = coords[0]
        basis = integer_row_basis([vec_sub(v, v0) for v in coords[1:]])
        if len(basis) != f.dim:
            raise RuntimeError("direction basis does not match the face dimension")
        out[f.id] = basis
    lattice._cache["orientations"] = out
    return out


def incidence(lattice: FaceLattice, fid: int, gid: int, orientations=None) -> int:
    """Incidence number of a covering pair F < G, dim G = dim F + 1.

    Sign of the determinant expressing [basis(F) | w] in basis(G), where w
    is the barycenter difference pointing from F into G.
    """
    f = lattice.face(fid)
    g = lattice.face(gid)
    if not (lattice.leq(fid, gid) and g.dim == f.dim + 1):
        raise ValueError(f"faces {fid}, {gid} are not a covering pair")
    if orientations is None:
        orientations = orient_faces(lattice)
    w = vec_sub(lattice.barycenter(gid), lattice.barycenter(fid))
    target_basis = orientations[gid]
    columns = []
    for u in list(orientations[fid]) + [w]:
        coords = coordinates_in_basis(target_basis, u)
        if coords is None:
            raise RuntimeError("vector outside the direction space of the cover")
        columns.append(coords)
    # columns were built per source vector; det wants them as matrix columns
    size = len(columns)
    rows = [[columns[j][i] for j in range(size)] for i in range(size)]
    sign = det_sign(rows)
    if sign == 0:
        raise RuntimeError("degenerate incidence determinant")
    return sign


def face_cochain_complex(lattice: FaceLattice, ring: str = "Z") -> IntegerChainComplex:
    """Cochain complex with degree-j basis the j-faces (including the top face).

    The matrices are integer incidence numbers whatever the ring; the ring
    argument only records the intended coefficient interpretation and is
    validated here.
    """
    normalize_ring(ring)
    cached = lattice._cache.get("face_cochain")
    if cached is not None:
        return cached
    n = lattice.polytope.dim
    orientations = orient_faces(lattice)
    labels = tuple(lattice.faces_of_dim(d) for d in range(n + 1))
    maps = []
    for d in range(n):
        rows = []
        for gid in labels[d + 1]:
            row = [
                incidence(lattice, fid, gid, orientations) if lattice.leq(fid, gid) else 0
                for fid in labels[d]
            ]
            rows.append(row)
        maps.append(IntMatrix.from_rows(rows, ncols=len(labels[d])))
    complex_ = IntegerChainComplex(0, labels, tuple(maps))
    lattice._cache["face_cochain"] = complex_
    return complex_


def restrict_cochain_complex(
    complex_: IntegerChainComplex, keep: frozenset
) -> IntegerChainComplex:
    """Subcomplex spanned by the kept labels, with the ambient coboundaries."""
    labels = tuple(tuple(x for x in layer if x in keep) for layer in complex_.basis_labels)
    maps = []
    for i, m in enumerate(complex_.maps):
        src = [j for j, x in enumerate(complex_.basis_labels[i]) if x in keep]
        dst = [j for j, x in enumerate(complex_.basis_labels[i + 1]) if x in keep]
        rows = [[m.entries[r][c] for c in src] for r in dst]
        maps.append(IntMatrix.from_rows(rows, ncols=len(src)))
    return IntegerChainComplex(complex_.start_degree, labels, tuple(maps))


# ---------------------------------------------------------------------------
# simplicial complexes of nerves


def simplicial_chain_complex(nerve: NerveComplex, reduced: bool = False) -> IntegerChainComplex:
    """Simplicial complex of a nerve with alternating-sign incidences.

    Degree j holds the j-simplices (sorted id tuples); the entry for a pair
    (tau, sigma) with sigma = tau minus its i-th vertex is (-1)^i. With
    ``reduced`` a degree -1 with the empty simplex is prepended, which turns
    the answer into reduced (co)homology.
    """
    top = nerve.top_dim()
    layers = [nerve.simplices_of_dim(k) for k in range(top + 1)]
    index = [{s: i for i, s in enumerate(layer)} for layer in layers]
    maps = []
    for k in range(top):
        rows = []
        for tau in layers[k + 1]:
            row = [0] * len(layers[k])
            for i in range(len(tau)):
                sigma = tau[:i] + tau[i + 1 :]
                row[index[k][sigma]] = (-1) ** i
            rows.append(tuple(row))
        maps.append(IntMatrix.from_rows(rows, ncols=len(layers[k])))
    labels = tuple(layers)
    if reduced:
        aug = IntMatrix.from_rows([(1,) for _ in layers[0]], ncols=1)
        return IntegerChainComplex(-1, (((),),) + labels, (aug,) + tuple(maps))
    return IntegerChainComplex(0, labels, tuple(maps))


def nerve_reduced_cohomology(nerve: NerveComplex, ring: str = "Z") -> CohomologyResult:
    return cohomology(simplicial_chain_complex(nerve, reduced=True), ring)


def reduced_betti_numbers(nerve: NerveComplex, ring: str = "Q") -> tuple[int, ...]:
    """Reduced Betti numbers b~_0 .. b~_top of a nerve over a field."""
    res = nerve_reduced_cohomology(nerve, ring)
    return tuple(res.free_rank(d) for d in range(nerve.top_dim() + 1))


def is_reduced_acyclic(nerve: NerveComplex) -> bool:
    """All reduced homology trivial over Z (free ranks and torsion)."""
    return nerve_reduced_cohomology(nerve, "Z").is_trivial()


def has_sphere_homology(nerve: NerveComplex, sphere_dim: int) -> bool:
    """Reduced homology of S^d over Z: one free generator in degree d."""
    res = nerve_reduced_cohomology(nerve, "Z")
    if res.has_torsion():
        return False
    expected = {sphere_dim: 1}
    for d in range(-1, nerve.top_dim() + 1):
        if res.free_rank(d) != expected.get(d, 0):
            return False
    return True
