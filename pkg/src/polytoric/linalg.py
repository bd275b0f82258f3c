"""Exact integer and rational linear algebra.

Vectors are plain tuples of ints or :class:`fractions.Fraction`, matrices are
immutable :class:`IntMatrix` values. All arithmetic is arbitrary precision;
nothing in this package ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


# ---------------------------------------------------------------------------
# vectors


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_neg(u):
    return tuple(-a for a in u)


def vec_scale(c, u):
    return tuple(c * a for a in u)


def primitive_vector(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def fractions_to_integer_vector(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector by a positive factor to a primitive integer vector."""
    scale = 1
    for x in v:
        d = Fraction(x).denominator
        scale = scale * d // gcd(scale, d)
    ints = [int(x * scale) for x in v]
    return primitive_vector(ints)


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix with an explicit shape (0-row/0-col allowed)."""

    nrows: int
    ncols: int
    entries: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(rows: Iterable[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        rs = tuple(tuple(int(x) for x in row) for row in rows)
        if rs:
            width = len(rs[0])
            if any(len(r) != width for r in rs):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("declared ncols does not match rows")
            ncols = width
        elif ncols is None:
            raise ValueError("ncols is required for a matrix with no rows")
        return IntMatrix(len(rs), ncols, rs)

    @staticmethod
    def zero(nrows: int, ncols: int) -> "IntMatrix":
        return IntMatrix(nrows, ncols, tuple(tuple(0 for _ in range(ncols)) for _ in range(nrows)))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.ncols,
            self.nrows,
            tuple(tuple(self.entries[i][j] for i in range(self.nrows)) for j in range(self.ncols)),
        )

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        rows = []
        for i in range(self.nrows):
            left = self.entries[i]
            rows.append(
                tuple(
                    sum(left[k] * other.entries[k][j] for k in range(self.ncols))
                    for j in range(other.ncols)
                )
            )
        return IntMatrix(self.nrows, other.ncols, tuple(rows))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)


# ---------------------------------------------------------------------------
# ring tags


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def normalize_ring(ring: str) -> tuple:
    """Parse a ring tag: ``"Z"``, ``"Q"`` or ``"Z/p"`` with p prime."""
    if ring == "Z":
        return ("Z",)
    if ring == "Q":
        return ("Q",)
    if ring.startswith("Z/"):
        try:
            p = int(ring[2:])
        except ValueError:
            raise ValueError(f"bad ring tag {ring!r}") from None
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        return ("Zp", p)
    raise ValueError(f"unknown ring tag {ring!r}")


# ---------------------------------------------------------------------------
# Gaussian elimination over Q and Z/p


def _rank_fraction(rows: list[list[Fraction]]) -> int:
    rank = 0
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1, 1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        rank += 1
        if r == len(rows):
            break
    return rank


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    rows = [[x % p for x in row] for row in rows]
    rank = 0
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
        rank += 1
        if r == len(rows):
            break
    return rank


def rank_over_field(m: IntMatrix, ring: str) -> int:
    """Rank of an integer matrix over Q or over Z/p (p prime)."""
    kind = normalize_ring(ring)
    if kind[0] == "Z":
        raise ValueError("rank needs a field; use 'Q' or 'Z/p'")
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if kind[0] == "Q":
        return _rank_fraction([[Fraction(x) for x in row] for row in m.entries])
    return _rank_mod_p([list(row) for row in m.entries], kind[1])


def rank_rational(vectors: Sequence[Sequence]) -> int:
    """Rank over Q of a list of int/Fraction row vectors."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    return _rank_fraction(rows)


def det_sign(rows: Sequence[Sequence]) -> int:
    """Sign (-1, 0, +1) of the determinant of a square rational matrix."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        if a[c][c] < 0:
            sign = -sign
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return sign


def coordinates_in_basis(basis: Sequence[Sequence], target: Sequence) -> tuple[Fraction, ...] | None:
    """Coefficients c with sum(c_i * basis_i) == target, or None if unsolvable."""
    k = len(basis)
    if k == 0:
        return () if all(Fraction(x) == 0 for x in target) else None
    n = len(basis[0])
    # augmented n x (k+1) system: columns are the basis vectors
    a = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = Fraction(1, 1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append((r, c))
        r += 1
    for i in range(r, n):
        if a[i][k] != 0:
            return None
    coords = [Fraction(0)] * k
    for row, col in pivots:
        coords[col] = a[row][k]
    return tuple(coords)


def rational_nullspace(rows: Sequence[Sequence], dim: int) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel of the given row vectors inside Q^dim."""
    a = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(dim):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = Fraction(1, 1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * dim
        v[fc] = Fraction(1)
        for row, pc in zip(range(len(pivots)), pivots):
            v[pc] = -a[row][fc]
        basis.append(tuple(v))
    return basis


def kernel_line(rows: Sequence[Sequence], dim: int) -> tuple[int, ...] | None:
    """Primitive integer spanning vector of a one-dimensional kernel, else None."""
    basis = rational_nullspace(rows, dim)
    if len(basis) != 1:
        return None
    return fractions_to_integer_vector(basis[0])


def integer_row_basis(vectors: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Deterministic integer basis of the row space (Hermite-style echelon rows).

    Pivot entries are positive and entries above each pivot are reduced into
    [0, pivot), so the result depends only on the row space and the input
    dimension, not on the order of the generators.
    """
    if not vectors:
        return ()
    dim = len(vectors[0])
    pool = [list(v) for v in vectors if any(v)]
    result: list[list[int]] = []
    pivot_cols: list[int] = []
    for c in range(dim):
        active = [row for row in pool if row[c] != 0]
        if not active:
            continue
        rest = [row for row in pool if row[c] == 0]
        # Euclid on the c-entries until a single row survives
        while len(active) > 1:
            active.sort(key=lambda row: abs(row[c]))
            base = active[0]
            new_active = [base]
            for row in active[1:]:
                q = row[c] // base[c]
                reduced = [x - q * y for x, y in zip(row, base)]
                if reduced[c] != 0:
                    new_active.append(reduced)
                elif any(reduced):
                    rest.append(reduced)
            active = new_active
        pivot = active[0]
        if pivot[c] < 0:
            pivot = [-x for x in pivot]
        result.append(pivot)
        pivot_cols.append(c)
        pool = rest
    # back-reduce entries above each pivot
    for i in range(len(result)):
        for j in range(i + 1, len(result)):
            c = pivot_cols[j]
            q = result[i][c] // result[j][c]
            if q:
                result[i] = [x - q * y for x, y in zip(result[i], result[j])]
    return tuple(tuple(row) for row in result)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithForm:
    """Elementary divisors d_1 | d_2 | ... of an integer matrix."""

    elementary_divisors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.elementary_divisors)

    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.elementary_divisors if d > 1)


def _min_abs_nonzero(a: list[list[int]], t: int, nr: int, nc: int) -> tuple[int, int] | None:
    best = None
    best_val = None
    for i in range(t, nr):
        row = a[i]
        for j in range(t, nc):
            x = row[j]
            if x != 0 and (best_val is None or abs(x) < best_val):
                best = (i, j)
                best_val = abs(x)
                if best_val == 1:
                    return best
    return best


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Smith normal form by elementary row/column operations.

    Pivots are chosen by minimal absolute value; the divisibility chain is
    enforced by folding offending rows into the pivot row.
    """
    a = [list(row) for row in m.entries]
    nr, nc = m.nrows, m.ncols
    divisors: list[int] = []
    t = 0
    while t < min(nr, nc):
        pos = _min_abs_nonzero(a, t, nr, nc)
        if pos is None:
            break
        pi, pj = pos
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            piv = a[t][t]
            for i in range(t + 1, nr):
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            left = [i for i in range(t + 1, nr) if a[i][t] != 0]
            if left:
                i = min(left, key=lambda i: abs(a[i][t]))
                a[t], a[i] = a[i], a[t]
                continue
            for j in range(t + 1, nc):
                q = a[t][j] // piv
                if q:
                    for row in a:
                        row[j] -= q * row[t]
            left = [j for j in range(t + 1, nc) if a[t][j] != 0]
            if left:
                j = min(left, key=lambda j: abs(a[t][j]))
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            break
        piv = a[t][t]
        offender = None
        for i in range(t + 1, nr):
            if any(a[i][j] % piv for j in range(t + 1, nc)):
                offender = i
                break
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            continue
        divisors.append(abs(piv))
        t += 1
    return SmithForm(tuple(divisors))
