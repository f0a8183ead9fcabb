"""Exact rationals and dense univariate polynomials over them.

Scalars are :class:`fractions.Fraction`, which is already kept in lowest
terms with a positive denominator.  Polynomials are stored as an immutable
tuple of coefficients in ascending order of degree, with trailing zeros
stripped on construction, so structural equality is mathematical equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import NonzeroRemainder

Rational = Fraction
Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:/(\d+))?\s*")


def parse_rational(text: str) -> Fraction:
    """Parse ``"n"`` or ``"n/d"`` (``d > 0``).  Decimals and exponents are rejected."""
    match = _RATIONAL_RE.fullmatch(text)
    if match is None:
        raise ValueError(f"not a rational number: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value: Scalar) -> str:
    return str(Fraction(value))


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Poly:
    """Dense polynomial in ``x`` with exact rational coefficients.

    ``coeffs[j]`` is the coefficient of ``x**j``.  The zero polynomial has
    no coefficients and ``degree`` ``None``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_as_fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "_coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self._coeffs,))

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, value: Scalar = 1) -> "Poly":
        return cls([0] * degree + [value])

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(parse_rational(s) for s in data)

    def to_json(self) -> list[str]:
        return [format_rational(a) for a in self._coeffs]

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_monic(self) -> bool:
        return self.leading() == 1

    def coeff(self, j: int) -> Fraction:
        if 0 <= j < len(self._coeffs):
            return self._coeffs[j]
        return Fraction(0)

    def __call__(self, x0: Scalar) -> Fraction:
        x0 = _as_fraction(x0)
        acc = Fraction(0)
        for a in reversed(self._coeffs):
            acc = acc * x0 + a
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __neg__(self):
        return Poly(-a for a in self._coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] += bi
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(a * other for a in self._coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for j in range(len(self._coeffs) - 1, -1, -1):
            a = self._coeffs[j]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if j == 0:
                body = str(mag)
            else:
                power = "x" if j == 1 else f"x^{j}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(value) -> Poly | None:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly([value])
    return None


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def poly_from_roots(roots: Iterable) -> Poly:
    """Monic polynomial ``prod (x - r)`` over ``roots``; the empty product is 1."""
    coeffs = [Fraction(1)]
    for r in roots:
        r = _as_fraction(r)
        # multiply by (x - r) in place
        shifted = [Fraction(0)] + coeffs
        for i, a in enumerate(coeffs):
            shifted[i] -= r * a
        coeffs = shifted
    return Poly(coeffs)


def poly_eval(p: Poly, x0: Scalar) -> Fraction:
    return p(x0)


def poly_coeff(p: Poly, j: int) -> Fraction:
    """Coefficient of ``x**j``; zero outside ``0..deg p``."""
    return p.coeff(j)


def poly_div_linear(p: Poly, r: Scalar) -> Poly:
    """Exact quotient ``p / (x - r)`` by synthetic division.

    Raises :class:`NonzeroRemainder` if ``r`` is not a root of ``p``.
    """
    r = _as_fraction(r)
    c = p.coeffs
    if not c:
        return Poly()
    quotient = [Fraction(0)] * (len(c) - 1)
    acc = Fraction(0)
    for j in range(len(c) - 1, 0, -1):
        acc = acc * r + c[j]
        quotient[j - 1] = acc
    remainder = acc * r + c[0]
    if remainder != 0:
        raise NonzeroRemainder(f"{format_rational(r)} is not a root of {p} (remainder {remainder})")
    return Poly(quotient)


def poly_arith(op: str, p: Poly, q) -> Poly:
    """Ring operation by name: ``add``, ``sub``, ``mul`` or ``scale``.

    For ``scale`` either argument may be the scalar.
    """
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        if isinstance(p, Poly):
            p, q = q, p
        return q * _as_fraction(p)
    raise ValueError(f"unknown operation {op!r}")
