"""Subresultants, their cofactors and the resultant, from coefficient determinants.

For monic ``f`` (degree ``m``) and ``g`` (degree ``n``) the k-th subresultant
is the determinant of an ``(m+n-2k)``-square matrix whose first
``m+n-2k-1`` columns are shifted coefficient bands of ``f`` (``n-k`` rows)
and ``g`` (``m-k`` rows), and whose last column holds ``x^i f`` / ``x^j g``.
Splitting that last column gives ``Sres_k = F_k f + G_k g``; ``F_k`` and
``G_k`` are obtained here by Laplace expansion along the split column, so
only scalar minors ever need a determinant.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import IndexOutOfRange, NotMonic
from .exact_poly import Poly


class CofactorKind(enum.Enum):
    F = "F"
    G = "G"


def fraction_free_det(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Bareiss elimination.

    Each row is first scaled to integers by the lcm of its denominators; the
    product of those scale factors is divided back out at the end.  The
    empty matrix has determinant 1.
    """
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("matrix is not square")
    if size == 0:
        return Fraction(1)

    scale = 1
    rows = []
    for row in matrix:
        row = [Fraction(a) for a in row]
        d = lcm(*(a.denominator for a in row))
        scale *= d
        rows.append([a.numerator * (d // a.denominator) for a in row])

    sign = 1
    prev = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, size):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        row_k = rows[k]
        for i in range(k + 1, size):
            row_i = rows[i]
            lead = row_i[k]
            for j in range(k + 1, size):
                # exact by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * rows[-1][-1], scale)


def _check_inputs(f: Poly, g: Poly, k: int) -> tuple[int, int]:
    m, n = f.degree, g.degree
    if m is None or n is None or m < 1 or n < 1:
        raise IndexOutOfRange(f"both polynomials need degree >= 1 (got {m}, {n})")
    if not f.is_monic() or not g.is_monic():
        raise NotMonic("f and g must be monic")
    lo = min(m, n)
    if not (0 <= k < lo or (k == lo and m != n)):
        raise IndexOutOfRange(
            f"k={k} outside 0 <= k < min(m,n) (or k = min(m,n) when m != n) for m={m}, n={n}"
        )
    return m, n


@dataclass(frozen=True)
class SubresMatrix:
    """Coefficient part of the k-th subresultant matrix.

    ``entries`` has ``m+n-2k`` rows and ``m+n-2k-1`` columns; the
    polynomial-valued last column is implicit.  The first
    ``top_block_rows`` rows come from ``f``, the rest from ``g``.
    """

    entries: tuple[tuple[Fraction, ...], ...]
    top_block_rows: int
    bottom_block_rows: int
    k: int
    m: int
    n: int

    @classmethod
    def build(cls, f: Poly, g: Poly, k: int) -> "SubresMatrix":
        m, n = _check_inputs(f, g, k)
        width = m + n - 2 * k - 1
        rows = []
        for i in range(n - k):
            rows.append(tuple(f.coeff(m - (j - i)) for j in range(width)))
        for i in range(m - k):
            rows.append(tuple(g.coeff(n - (j - i)) for j in range(width)))
        return cls(tuple(rows), n - k, m - k, k, m, n)

    @property
    def size(self) -> int:
        return self.top_block_rows + self.bottom_block_rows

    def last_column_power(self, row: int) -> int:
        """Power of ``x`` multiplying f (top rows) or g (bottom rows) in ``row``."""
        if row < self.top_block_rows:
            return self.top_block_rows - 1 - row
        return self.size - 1 - row

    def minor(self, row: int) -> list[tuple[Fraction, ...]]:
        return [r for i, r in enumerate(self.entries) if i != row]


def cofactor_poly(f: Poly, g: Poly, k: int, which: CofactorKind | str) -> Poly:
    """``F_k(f, g)`` or ``G_k(f, g)``.

    Only the rows of the chosen block carry a nonzero entry ``x^power`` in
    the split column, so the determinant is the signed sum of those powers
    times the complementary scalar minors.
    """
    which = CofactorKind(which)
    M = SubresMatrix.build(f, g, k)
    size = M.size
    if which is CofactorKind.F:
        block = range(0, M.top_block_rows)
    else:
        block = range(M.top_block_rows, size)

    coeffs = [Fraction(0)] * (max(M.top_block_rows, M.bottom_block_rows) + 1)
    for row in block:
        minor = fraction_free_det(M.minor(row))
        if minor == 0:
            continue
        sign = -1 if (row + size - 1) % 2 else 1
        coeffs[M.last_column_power(row)] += sign * minor
    return Poly(coeffs)


def cofactors(f: Poly, g: Poly, k: int) -> tuple[Poly, Poly]:
    return cofactor_poly(f, g, k, CofactorKind.F), cofactor_poly(f, g, k, CofactorKind.G)


def subresultant(f: Poly, g: Poly, k: int) -> Poly:
    """``Sres_k(f, g)``, assembled as ``F_k f + G_k g``."""
    F, G = cofactors(f, g, k)
    return F * f + G * g


def resultant(f: Poly, g: Poly) -> Fraction:
    return subresultant(f, g, 0).coeff(0)


def principal_coeff(f: Poly, g: Poly, k: int) -> Fraction:
    """Coefficient of ``x^k`` in ``Sres_k(f, g)``; zero when it is defective."""
    return subresultant(f, g, k).coeff(k)
