import random
from fractions import Fraction

import pytest

from polytoric.linalg import (
    IntMatrix,
    coordinates_in_basis,
    det_sign,
    integer_row_basis,
    kernel_line,
    rank_over_field,
    rank_rational,
    smith_normal_form,
)


def M(rows, ncols=None):
    return IntMatrix.from_rows(rows, ncols=ncols)


def test_smith_diag_2_3():
    # unimodular search oracle: divisors of diag(2,3) are 1 and 6
    assert smith_normal_form(M([[2, 0], [0, 3]])).elementary_divisors == (1, 6)


def test_smith_identity():
    assert smith_normal_form(IntMatrix.identity(3)).elementary_divisors == (1, 1, 1)


def test_smith_zero():
    snf = smith_normal_form(IntMatrix.zero(2, 2))
    assert snf.elementary_divisors == ()
    assert snf.rank == 0


def _determinantal_divisors_oracle(rows):
    # d_k = D_k / D_{k-1} with D_k the gcd of all k x k minors
    from itertools import combinations
    from math import gcd

    def minor_det(rs, cs):
        sub = [[rows[i][j] for j in cs] for i in rs]
        if len(sub) == 1:
            return sub[0][0]
        total = 0
        for j in range(len(sub)):
            total += (-1) ** j * sub[0][j] * minor_det_inner(
                [r[:j] + r[j + 1 :] for r in sub[1:]]
            )
        return total

    def minor_det_inner(sub):
        if len(sub) == 1:
            return sub[0][0]
        total = 0
        for j in range(len(sub)):
            total += (-1) ** j * sub[0][j] * minor_det_inner(
                [r[:j] + r[j + 1 :] for r in sub[1:]]
            )
        return total

    nr, nc = len(rows), len(rows[0])
    divisors = []
    previous = 1
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for rs in combinations(range(nr), k):
            for cs in combinations(range(nc), k):
                g = gcd(g, minor_det(rs, cs))
        if g == 0:
            break
        divisors.append(g // previous)
        previous = g
    return tuple(divisors)


def test_smith_against_determinantal_divisors():
    m = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    expected = _determinantal_divisors_oracle(m)
    assert expected == (2, 2, 156)  # frozen from the oracle
    assert smith_normal_form(M(m)).elementary_divisors == expected

    rng = random.Random(17)
    for _ in range(25):
        nr = rng.randint(1, 4)
        nc = rng.randint(1, 4)
        m = [[rng.randint(-5, 5) for _ in range(nc)] for _ in range(nr)]
        assert (
            smith_normal_form(M(m, ncols=nc)).elementary_divisors
            == _determinantal_divisors_oracle(m)
        )


def test_smith_divisibility_chain_and_rank():
    rng = random.Random(7)
    for _ in range(40):
        nr = rng.randint(1, 5)
        nc = rng.randint(1, 5)
        m = M([[rng.randint(-6, 6) for _ in range(nc)] for _ in range(nr)])
        snf = smith_normal_form(m)
        divs = snf.elementary_divisors
        assert all(d > 0 for d in divs)
        for a, b in zip(divs, divs[1:]):
            assert b % a == 0
        assert snf.rank == rank_over_field(m, "Q")


def _random_unimodular_ops(rows, rng):
    rows = [list(r) for r in rows]
    n = len(rows)
    for _ in range(10):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    return rows


def test_smith_invariant_under_unimodular_factors():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(2, 4)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        left = _random_unimodular_ops(m, rng)
        both = [list(r) for r in zip(*_random_unimodular_ops(list(zip(*left)), rng))]
        assert (
            smith_normal_form(M(m, ncols=n)).elementary_divisors
            == smith_normal_form(M(both, ncols=n)).elementary_divisors
        )


def test_rank_over_fields():
    m = M([[2, 0], [0, 2]])
    assert rank_over_field(m, "Q") == 2
    assert rank_over_field(m, "Z/2") == 0
    assert rank_over_field(M([[1, 1], [1, 1]]), "Q") == 1


def test_rank_rejects_bad_rings():
    m = M([[1]])
    with pytest.raises(ValueError):
        rank_over_field(m, "Z/4")
    with pytest.raises(ValueError):
        rank_over_field(m, "Z/1")
    with pytest.raises(ValueError):
        rank_over_field(m, "Z")


def test_rank_mod_p_differs_from_q_exactly_on_torsion():
    m = M([[2, 0], [0, 3]])
    assert rank_over_field(m, "Q") == 2
    assert rank_over_field(m, "Z/2") == 1
    assert rank_over_field(m, "Z/3") == 1
    assert rank_over_field(m, "Z/5") == 2


def test_det_sign():
    assert det_sign([[2, 0], [0, 3]]) == 1
    assert det_sign([[0, 1], [1, 0]]) == -1
    assert det_sign([[1, 2], [2, 4]]) == 0
    assert det_sign([[Fraction(1, 2)]]) == 1


def test_coordinates_in_basis():
    basis = [(1, 0, 1), (0, 1, 1)]
    assert coordinates_in_basis(basis, (2, 3, 5)) == (2, 3)
    assert coordinates_in_basis(basis, (0, 0, 1)) is None
    assert coordinates_in_basis([], (0, 0)) == ()
    assert coordinates_in_basis([], (1, 0)) is None


def test_kernel_line():
    assert kernel_line([(1, 1)], 2) in ((1, -1), (-1, 1))
    assert kernel_line([(1, 0, 0), (0, 1, 0)], 3) in ((0, 0, 1), (0, 0, -1))
    assert kernel_line([(1, 0), (0, 1)], 2) is None  # trivial kernel
    assert kernel_line([], 1) in ((1,), (-1,))


def test_integer_row_basis_is_canonical():
    a = integer_row_basis([(2, 4), (0, 2)])
    b = integer_row_basis([(2, 6), (0, 2), (2, 4)])
    assert a == b  # same lattice, same reduced basis
    assert rank_rational(a) == 2
    assert integer_row_basis([(0, 0)]) == ()
    assert integer_row_basis([(-3, 0)]) == ((3, 0),)


def test_matrix_shapes_and_product():
    a = M([[1, 2], [3, 4]])
    b = M([[1, 0], [0, 1]])
    assert a.mul(b).entries == a.entries
    z = IntMatrix.zero(0, 3)
    assert z.nrows == 0 and z.ncols == 3
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [1]])
