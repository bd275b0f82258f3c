import pytest

from polytoric import build_polytope, face_lattice

CORPUS_VERTICES = {
    "SEG": [[0], [1]],
    "TRI": [[0, 0], [1, 0], [0, 1]],
    "SQ": [[0, 0], [1, 0], [0, 1], [1, 1]],
    "SQ2": [[0, 0], [2, 0], [0, 2], [2, 2]],
    "CUBE": [[i, j, k] for i in (0, 1) for j in (0, 1) for k in (0, 1)],
    "TRI2": [[0, 0], [2, 0], [0, 2]],
}


@pytest.fixture(scope="session")
def corpus():
    return {name: build_polytope(v) for name, v in CORPUS_VERTICES.items()}


@pytest.fixture(scope="session")
def lattices(corpus):
    return {name: face_lattice(poly) for name, poly in corpus.items()}


@pytest.fixture(scope="session")
def seg(lattices):
    return lattices["SEG"]


@pytest.fixture(scope="session")
def tri(lattices):
    return lattices["TRI"]


@pytest.fixture(scope="session")
def sq(lattices):
    return lattices["SQ"]


@pytest.fixture(scope="session")
def cube(lattices):
    return lattices["CUBE"]


def face_id(lattice, *coords):
    """Face id from its vertex coordinate tuples."""
    verts = lattice.polytope.vertices
    ids = frozenset(verts.index(tuple(c)) for c in coords)
    fid = lattice.face_by_vertices(ids)
    assert fid is not None, f"no face with vertices {coords}"
    return fid
