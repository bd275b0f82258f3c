"""Lattice-point counting, Ehrhart polynomials, reciprocity, splitting index.

Counting is plain box enumeration with exact facet tests. The counting
function accepts any integer dilation factor, including negative ones, which
is what reciprocity is about: (-1)^n E(-k) equals the number of interior
lattice points of -kP, with the dilate taken literally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .polytope import LatticePolytope


def _dilate_box(poly: LatticePolytope, k: int) -> list[range]:
    ranges = []
    for lo, hi in poly.bounding_box():
        a, b = sorted((k * lo, k * hi))
        ranges.append(range(a, b + 1))
    return ranges


def dilate_contains(poly: LatticePolytope, k: int, x, strict: bool = False) -> bool:
    """Whether x lies in kP (strict: in the interior of kP), any integer k.

    Scaling by a negative k reverses every facet inequality, so membership
    in the literal dilate means all facet values <= 0 in that case.
    """
    sign = 1 if k >= 0 else -1
    for f in poly.facets:
        v = sign * (sum(c * nc for c, nc in zip(x, f.normal)) + k * f.offset)
        if v < 0 or (strict and v == 0):
            return False
    return True


def dilate_count(poly: LatticePolytope, k: int, strict: bool = False) -> int:
    """Lattice points of the literal dilate kP, boundary included or not."""
    count = 0
    for x in product(*_dilate_box(poly, k)):
        if dilate_contains(poly, k, x, strict):
            count += 1
    return count


def count_points(poly: LatticePolytope, k: int, interior: bool = False) -> int:
    """Number of lattice points of kP, or of its interior."""
    if k < 0:
        raise ValueError("dilation factor must be non-negative")
    if interior and k < 1:
        raise ValueError("interior counts need k >= 1")
    return dilate_count(poly, k, interior)


@dataclass(frozen=True)
class EhrhartPolynomial:
    """E(T) = sum(c_i T^i) with exact rational coefficients, degree = dim P."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[-1] <= 0:
            raise ValueError("leading coefficient must be positive")
        if self.coefficients[0] != 1:
            raise ValueError("constant term must be 1")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, k) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * k + c
        return acc

    def value_at_integer(self, k: int) -> int:
        v = self(k)
        if v.denominator != 1:
            raise ValueError(f"E({k}) = {v} is not an integer")
        return v.numerator

    def integral_roots(self) -> tuple[int, ...]:
        """Distinct integer roots; they can only lie in [-(degree+1), 0]."""
        return tuple(j for j in range(-(self.degree + 1), 1) if self(j) == 0)


def ehrhart_polynomial(poly: LatticePolytope) -> EhrhartPolynomial:
    """Exact Lagrange interpolation through the counts at k = 0 .. n."""
    n = poly.dim
    counts = [count_points(poly, k) for k in range(n + 1)]
    coeffs = [Fraction(0)] * (n + 1)
    for k, y in enumerate(counts):
        # numerator polynomial prod_{j != k} (T - j), then scale
        num = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n + 1):
            if j == k:
                continue
            num = [Fraction(0)] + num
            for i in range(len(num) - 1):
                num[i] -= j * num[i + 1]
            denom *= k - j
        scale = Fraction(y) / denom
        for i, c in enumerate(num):
            coeffs[i] += scale * c
    ehr = EhrhartPolynomial(tuple(coeffs))
    for k in range(-(n + 2), n + 3):
        ehr.value_at_integer(k)
    return ehr


def reciprocity_check(poly: LatticePolytope, kmax: int) -> bool:
    """(-1)^n E(-j) equals the interior lattice-point count of -jP, j = 1..kmax."""
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    n = poly.dim
    ehr = ehrhart_polynomial(poly)
    sign = (-1) ** n
    for j in range(1, kmax + 1):
        predicted = sign * ehr.value_at_integer(-j)
        if predicted != dilate_count(poly, -j, strict=True):
            return False
    return True


def splitting_index(poly: LatticePolytope) -> int:
    """Number of distinct integral Ehrhart roots.

    Computed twice and asserted equal: as the count of integral roots (which
    must form the consecutive block -1 .. -k), and as the least j >= 0 such
    that (j+1)P has an interior lattice point.
    """
    n = poly.dim
    ehr = ehrhart_polynomial(poly)
    roots = ehr.integral_roots()
    if ehr(-(n + 2)) == 0:
        raise ArithmeticError("integral root outside the admissible window")
    if roots and set(roots) != {-j for j in range(1, len(roots) + 1)}:
        raise ArithmeticError(f"integral roots {roots} are not a consecutive block")
    by_roots = len(roots)
    by_interior = next(
        (j for j in range(n + 1) if dilate_count(poly, j + 1, strict=True) > 0), None
    )
    if by_interior is None:
        raise ArithmeticError("no dilate up to n+1 has an interior lattice point")
    if by_roots != by_interior:
        raise ArithmeticError(
            f"splitting index mismatch: {by_roots} roots vs first interior dilate {by_interior}"
        )
    return by_roots
