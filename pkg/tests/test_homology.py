import pytest

from polytoric import boundary as bd
from polytoric import homology as hm
from polytoric.linalg import IntMatrix
from conftest import face_id


def test_orientation_bases(sq, seg):
    orients = hm.orient_faces(seg)
    for fid in seg.faces_of_dim(0):
        assert orients[fid] == ()
    assert orients[seg.top_id] == ((1,),)

    orients = hm.orient_faces(sq)
    bottom = face_id(sq, (0, 0), (1, 0))
    assert orients[bottom] == ((1, 0),)
    assert orients[sq.top_id] == ((1, 0), (0, 1))


def test_incidence_segment_signs(seg):
    v0 = face_id(seg, (0,))
    v1 = face_id(seg, (1,))
    s0 = hm.incidence(seg, v0, seg.top_id)
    s1 = hm.incidence(seg, v1, seg.top_id)
    assert {s0, s1} == {1, -1}
    assert s0 == 1  # w = +1/2 in the basis (1,)


def test_incidence_square_example(sq):
    v00 = face_id(sq, (0, 0))
    bottom = face_id(sq, (0, 0), (1, 0))
    assert hm.incidence(sq, v00, bottom) == 1


def test_incidence_rejects_non_covers(sq):
    v00 = face_id(sq, (0, 0))
    v11 = face_id(sq, (1, 1))
    with pytest.raises(ValueError):
        hm.incidence(sq, v00, v11)
    with pytest.raises(ValueError):
        hm.incidence(sq, v00, sq.top_id)


def test_face_cochain_complex_shapes(seg, tri, sq):
    d = hm.face_cochain_complex(seg)
    assert [len(layer) for layer in d.basis_labels] == [2, 1]
    assert d.maps[0].entries in (((1, -1),), ((-1, 1),))
    assert [len(layer) for layer in hm.face_cochain_complex(sq).basis_labels] == [4, 4, 1]
    assert [len(layer) for layer in hm.face_cochain_complex(tri).basis_labels] == [3, 3, 1]


def test_dd_zero_on_all_face_complexes(lattices):
    for lat in lattices.values():
        c = hm.face_cochain_complex(lat)
        for i in range(len(c.maps) - 1):
            assert c.maps[i + 1].mul(c.maps[i]).is_zero()


def test_face_complex_has_point_cohomology(lattices):
    for lat in lattices.values():
        n = lat.polytope.dim
        c = hm.face_cochain_complex(lat)
        for ring in ("Z", "Q", "Z/2", "Z/3"):
            res = hm.cohomology(c, ring)
            assert res.free_rank(0) == 1
            assert not res.has_torsion()
            assert all(res.free_rank(d) == 0 for d in range(1, n + 1))


def test_dd_violation_is_rejected():
    d0 = IntMatrix.from_rows([[1, 1]])
    d1 = IntMatrix.from_rows([[1]])
    with pytest.raises(ValueError, match="d∘d"):
        hm.IntegerChainComplex(0, ((0, 1), (2,), (3,)), (d0, d1))


def test_nerve_homology_examples(sq, seg):
    eight_cycle = bd.nerve(bd.boundary_complex(sq))
    res = hm.nerve_reduced_cohomology(eight_cycle, "Z")
    assert res.free_rank(0) == 0 and res.free_rank(1) == 1
    assert not res.has_torsion()

    two_points = bd.nerve(bd.boundary_complex(seg))
    res = hm.nerve_reduced_cohomology(two_points, "Z")
    assert res.free_rank(0) == 1

    single = bd.nerve(bd.FaceSubset(sq, frozenset([face_id(sq, (0, 0))])))
    assert hm.is_reduced_acyclic(single)


def test_boundary_nerve_is_a_sphere(lattices):
    for lat in lattices.values():
        n = lat.polytope.dim
        assert hm.has_sphere_homology(bd.nerve(bd.boundary_complex(lat)), n - 1)


def test_unreduced_vs_reduced(sq):
    n = bd.nerve(bd.boundary_complex(sq))
    unreduced = hm.cohomology(hm.simplicial_chain_complex(n), "Z")
    assert unreduced.free_rank(0) == 1  # one component
    assert unreduced.free_rank(1) == 1


def test_zero_complex():
    c = hm.IntegerChainComplex(0, ((), ()), (IntMatrix.zero(0, 0),))
    res = hm.cohomology(c, "Z")
    assert res.is_trivial()


def _projective_plane_nerve():
    # minimal 6-vertex triangulation of the real projective plane: every one
    # of the 15 edges lies in exactly two of the ten triangles
    triangles = [
        (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
        (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
    ]
    simplices = {(v,) for v in range(1, 7)}
    for t in triangles:
        simplices.add(t)
        simplices.update({t[:i] + t[i + 1 :] for i in range(3)})
    return bd.NerveComplex(
        tuple(range(1, 7)), tuple(sorted(simplices, key=lambda s: (len(s), s)))
    )


def test_torsion_is_reported():
    # cohomology of the projective plane: Z/2 shows up in top degree over Z,
    # an extra rank appears over Z/2, and Q / Z/3 see nothing
    n = _projective_plane_nerve()
    assert n.f_vector() == (6, 15, 10)
    over_z = hm.nerve_reduced_cohomology(n, "Z")
    assert over_z.free == (0, 0, 0, 0)  # degrees -1 .. 2
    assert over_z.torsion_at(2) == (2,)
    over_2 = hm.nerve_reduced_cohomology(n, "Z/2")
    assert over_2.free_rank(1) == 1 and over_2.free_rank(2) == 1
    assert hm.nerve_reduced_cohomology(n, "Q").is_trivial()
    assert hm.nerve_reduced_cohomology(n, "Z/3").is_trivial()
    assert not hm.is_reduced_acyclic(n)
    assert not hm.has_sphere_homology(n, 2)


def test_field_ranks_match_integer_ranks_without_torsion(lattices):
    for name in ("TRI", "SQ", "CUBE"):
        lat = lattices[name]
        c = hm.face_cochain_complex(lat)
        z = hm.cohomology(c, "Z")
        assert not z.has_torsion()
        for ring in ("Q", "Z/2", "Z/3"):
            f = hm.cohomology(c, ring)
            assert f.free == z.free


def test_restriction_keeps_ambient_incidences(sq):
    c = hm.face_cochain_complex(sq)
    v00 = face_id(sq, (0, 0))
    keep = sq.above(v00)  # upward-closed, so the restriction is a complex
    sub = hm.restrict_cochain_complex(c, keep)
    assert [len(layer) for layer in sub.basis_labels] == [1, 2, 1]
    bottom = face_id(sq, (0, 0), (1, 0))
    col = sub.basis_labels[0].index(v00)
    row = sub.basis_labels[1].index(bottom)
    assert sub.maps[0].entries[row][col] == hm.incidence(sq, v00, bottom)
