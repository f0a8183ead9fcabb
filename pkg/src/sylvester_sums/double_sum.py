"""Sylvester's double sums, computed straight from their definition.

Nothing here uses determinants or subresultants: the double sum is the
reference every closed formula in :mod:`sylvester_sums.verify` is checked
against, so it is kept deliberately naive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DuplicateRoots, IndexOutOfRange
from .exact_poly import Poly, _as_fraction, format_rational, parse_rational, poly_from_roots


class RootList(tuple):
    """Ordered tuple of pairwise distinct exact rationals."""

    def __new__(cls, roots: Iterable = ()):
        values = tuple(_as_fraction(r) for r in roots)
        if len(set(values)) != len(values):
            seen, dups = set(), []
            for v in values:
                if v in seen:
                    dups.append(format_rational(v))
                seen.add(v)
            raise DuplicateRoots(f"repeated roots: {', '.join(dups)}")
        return super().__new__(cls, values)

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "RootList":
        return cls(parse_rational(s) for s in data)

    def to_json(self) -> list[str]:
        return [format_rational(r) for r in self]

    def without(self, root) -> "RootList":
        root = _as_fraction(root)
        if root not in self:
            raise ValueError(f"{root} not in root list")
        return RootList(r for r in self if r != root)

    def __repr__(self):
        return f"RootList([{', '.join(self.to_json())}])"


@dataclass(frozen=True)
class SylvParams:
    """The index bundle ``(m, n, p, q)``; everything else is derived."""

    m: int
    n: int
    p: int
    q: int

    def __post_init__(self):
        if not (0 <= self.p <= self.m and 0 <= self.q <= self.n):
            raise IndexOutOfRange(
                f"need 0 <= p <= m and 0 <= q <= n, got (m,n,p,q)=({self.m},{self.n},{self.p},{self.q})"
            )

    @property
    def k(self) -> int:
        return self.p + self.q

    @property
    def pbar(self) -> int:
        return self.m - self.p

    @property
    def qbar(self) -> int:
        return self.n - self.q

    @property
    def kbar(self) -> int:
        return self.m + self.n - self.k - 1

    @property
    def c(self) -> int:
        """Exponent of the sign in front of the large-k formula."""
        return self.pbar * self.qbar + self.n - self.p - 1 + self.n * self.q


def r_product(Y: Iterable, Z: Iterable) -> Fraction:
    """``prod (y - z)`` over all pairs; 1 if either side is empty."""
    Z = [_as_fraction(z) for z in Z]
    out = Fraction(1)
    for y in Y:
        y = _as_fraction(y)
        for z in Z:
            out *= y - z
    return out


def subsets(items: Sequence, size: int) -> list[tuple[tuple, tuple]]:
    """All ``(subset, complement)`` pairs of the given size, in lexicographic index order."""
    items = tuple(items)
    if not 0 <= size <= len(items):
        raise IndexOutOfRange(f"subset size {size} outside 0..{len(items)}")
    out = []
    for idx in combinations(range(len(items)), size):
        chosen = set(idx)
        out.append(
            (
                tuple(items[i] for i in idx),
                tuple(items[i] for i in range(len(items)) if i not in chosen),
            )
        )
    return out


def _terms(A: RootList, B: RootList, p: int, q: int):
    for A1, A2 in subsets(A, p):
        denom_a = r_product(A1, A2)
        for B1, B2 in subsets(B, q):
            scalar = r_product(A1, B1) * r_product(A2, B2) / (denom_a * r_product(B1, B2))
            yield scalar, A1, B1


def sylvester_double_sum(A: Iterable, B: Iterable, p: int, q: int, *, reverse: bool = False) -> Poly:
    """``Sylv^{p,q}(A, B)`` as a polynomial in ``x``.

    Sums, over all ``p``-subsets ``A'`` of ``A`` and ``q``-subsets ``B'`` of
    ``B``, the term ``R(x,A') R(x,B') R(A',B') R(A-A',B-B') / (R(A',A-A') R(B',B-B'))``.
    ``reverse`` walks the subset pairs backwards; the result must not change.
    """
    A, B = RootList(A), RootList(B)
    if not (0 <= p <= len(A) and 0 <= q <= len(B)):
        raise IndexOutOfRange(f"need 0 <= p <= {len(A)} and 0 <= q <= {len(B)}, got p={p}, q={q}")
    terms = list(_terms(A, B, p, q))
    if reverse:
        terms.reverse()
    total = Poly()
    for scalar, A1, B1 in terms:
        if scalar:
            total = total + poly_from_roots(A1 + B1) * scalar
    return total
