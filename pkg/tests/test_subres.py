import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from sylvester_sums import (
    CofactorKind,
    IndexOutOfRange,
    NotMonic,
    Poly,
    SubresMatrix,
    cofactor_poly,
    fraction_free_det,
    poly_from_roots,
    principal_coeff,
    resultant,
    subresultant,
)
from sylvester_sums.verify import random_rootlists

F_EX = Poly([2, -3, 1])  # (x-1)(x-2)
G_EX = Poly([-60, 47, -12, 1])  # (x-3)(x-4)(x-5)


def naive_det(M):
    """Cofactor expansion along the first row."""
    if not M:
        return Fraction(1)
    total = Fraction(0)
    for j, a in enumerate(M[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * a * naive_det(minor)
    return total


def leibniz_det(M, one):
    """Determinant of a matrix with ring entries, by summing over permutations."""
    n = len(M)
    total = one * 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = one
        for i in range(n):
            term = term * M[i][perm[i]]
        total = total + (term if inversions % 2 == 0 else -term)
    return total


def sres_by_definition(f, g, k):
    """Polynomial-valued determinant with x^i f / x^j g in the last column."""
    m, n = f.degree, g.degree
    width = m + n - 2 * k - 1
    rows = []
    for i in range(n - k):
        rows.append([Poly([f.coeff(m - (j - i))]) for j in range(width)] + [Poly.monomial(n - k - 1 - i) * f])
    for i in range(m - k):
        rows.append([Poly([g.coeff(n - (j - i))]) for j in range(width)] + [Poly.monomial(m - k - 1 - i) * g])
    return leibniz_det(rows, Poly([1]))


def euclid_remainder(a, b):
    """Remainder of a by monic b."""
    r = list(a.coeffs)
    db = b.degree
    while len(r) - 1 >= db and any(r):
        lead, shift = r[-1], len(r) - 1 - db
        for j, c in enumerate(b.coeffs):
            r[shift + j] -= lead * c
        r = list(Poly(r).coeffs)
    return Poly(r)


def valid_ks(m, n):
    return list(range(min(m, n) + (1 if m != n else 0)))


def random_matrix(rng, size):
    return [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(size)] for _ in range(size)]


class TestFractionFreeDet:
    def test_examples(self):
        assert fraction_free_det([]) == 1
        assert fraction_free_det([[1]]) == 1
        assert fraction_free_det([[1, 1], [1, 0]]) == -1
        assert fraction_free_det([[0, 1, -3], [1, -9, 20], [0, 1, -9]]) == 6
        assert naive_det([[0, 1, -3], [1, -9, 20], [0, 1, -9]]) == 6

    def test_needs_pivoting_and_singular(self):
        assert fraction_free_det([[0, 1], [1, 0]]) == -1
        assert fraction_free_det([[1, 2], [2, 4]]) == 0
        assert fraction_free_det([[0, 0], [0, 1]]) == 0

    def test_non_square(self):
        with pytest.raises(ValueError):
            fraction_free_det([[1, 2]])

    def test_agrees_with_cofactor_expansion(self):
        rng = random.Random(11)
        for _ in range(60):
            M = random_matrix(rng, rng.randint(1, 5))
            assert fraction_free_det(M) == naive_det(M)

    @settings(max_examples=60)
    @given(st.integers(1, 5).flatmap(
        lambda s: st.lists(st.lists(st.fractions(-10, 10, max_denominator=6), min_size=s, max_size=s),
                           min_size=s, max_size=s)))
    def test_agrees_with_cofactor_expansion_property(self, M):
        assert fraction_free_det(M) == naive_det(M)


class TestMatrix:
    def test_band_structure(self):
        M = SubresMatrix.build(F_EX, G_EX, 1)
        assert M.size == 3 and M.top_block_rows == 2 and M.bottom_block_rows == 1
        assert M.entries == ((1, -3), (0, 1), (1, -12))
        assert [M.last_column_power(i) for i in range(3)] == [1, 0, 0]

    def test_dimensions(self):
        f, g = poly_from_roots([1, 2, 3, 4]), poly_from_roots([5, 6, 7])
        for k in valid_ks(4, 3):
            M = SubresMatrix.build(f, g, k)
            assert len(M.entries) == 7 - 2 * k
            assert all(len(row) == 6 - 2 * k for row in M.entries)


class TestWorkedExample:
    def test_cofactors(self):
        assert cofactor_poly(F_EX, G_EX, 1, CofactorKind.F) == Poly([9, -1])
        assert cofactor_poly(F_EX, G_EX, 1, "G") == Poly([1])
        assert cofactor_poly(F_EX, G_EX, 2, "F") == Poly([1])
        assert cofactor_poly(F_EX, G_EX, 2, "G") == Poly()

    def test_subresultants(self):
        assert euclid_remainder(G_EX, F_EX) == Poly([-42, 18])
        assert subresultant(F_EX, G_EX, 1) == Poly([-42, 18]) == sres_by_definition(F_EX, G_EX, 1)
        assert subresultant(F_EX, G_EX, 2) == F_EX
        assert subresultant(F_EX, G_EX, 0) == Poly([144])
        assert G_EX(1) * G_EX(2) == 144

    def test_resultant(self):
        assert resultant(F_EX, G_EX) == 144
        assert resultant(Poly([-2, 1]), Poly([-3, 1])) == -1
        g = poly_from_roots([1, 9, -4])
        assert resultant(Poly([-1, 1]), g) == 0

    def test_principal_coeff(self):
        assert principal_coeff(F_EX, G_EX, 1) == 18
        assert principal_coeff(F_EX, G_EX, 0) == 144
        assert principal_coeff(F_EX, G_EX, 2) == 1

    def test_degree_one_pair(self):
        f, g = Poly([-2, 1]), Poly([-5, 1])
        assert cofactor_poly(f, g, 0, "F") == Poly([-1])
        assert cofactor_poly(f, g, 0, "G") == Poly([1])


class TestErrors:
    @pytest.mark.parametrize("k", [-1, 3, 7])
    def test_k_out_of_range(self, k):
        with pytest.raises(IndexOutOfRange):
            subresultant(F_EX, G_EX, k)

    def test_equal_degree_rejects_k_equal_m(self):
        f, g = poly_from_roots([1, 2]), poly_from_roots([3, 4])
        with pytest.raises(IndexOutOfRange):
            cofactor_poly(f, g, 2, "F")

    def test_not_monic(self):
        with pytest.raises(NotMonic):
            subresultant(F_EX * 2, G_EX, 0)
        with pytest.raises(NotMonic):
            resultant(F_EX, G_EX * 3)

    def test_constant_input(self):
        with pytest.raises(IndexOutOfRange):
            subresultant(Poly([1]), G_EX, 0)


PAIRS = [(m, n) for m in range(1, 5) for n in range(1, 5)]


@pytest.mark.parametrize("m, n", PAIRS)
def test_recombination_and_degree_bounds(m, n):
    for seed in range(3):
        A, B = random_rootlists(m, n, seed, 20)
        f, g = poly_from_roots(A), poly_from_roots(B)
        for k in valid_ks(m, n):
            F = cofactor_poly(f, g, k, "F")
            G = cofactor_poly(f, g, k, "G")
            S = subresultant(f, g, k)
            assert S == F * f + G * g
            if k < min(m, n):
                assert F.degree is None or F.degree <= n - k - 1
                assert G.degree is None or G.degree <= m - k - 1
                assert S.degree is None or S.degree <= k


@pytest.mark.parametrize("m, n", [(m, n) for m, n in PAIRS if m + n <= 6])
def test_subresultant_matches_polynomial_determinant(m, n):
    A, B = random_rootlists(m, n, 3, 20)
    f, g = poly_from_roots(A), poly_from_roots(B)
    for k in valid_ks(m, n):
        assert subresultant(f, g, k) == sres_by_definition(f, g, k)


@pytest.mark.parametrize("m, n", PAIRS)
def test_exchange_symmetry(m, n):
    A, B = random_rootlists(m, n, 5, 20)
    f, g = poly_from_roots(A), poly_from_roots(B)
    for k in valid_ks(m, n):
        assert subresultant(g, f, k) == subresultant(f, g, k) * (-1) ** ((m - k) * (n - k))
        if k < min(m, n):
            G = cofactor_poly(f, g, k, "G")
            F_swapped = cofactor_poly(g, f, k, "F")
            for alpha in A:
                assert G(alpha) == F_swapped(alpha) * (-1) ** ((n - k) * (m - k))


@pytest.mark.parametrize("m, n", PAIRS)
def test_boundary_cofactors(m, n):
    A, B = random_rootlists(m, n, 9, 20)
    f, g = poly_from_roots(A), poly_from_roots(B)
    if m < n:
        assert cofactor_poly(f, g, m, "F") == Poly([1])
        assert cofactor_poly(f, g, m, "G") == Poly()
        assert subresultant(f, g, m) == f
    if n < m:
        assert cofactor_poly(f, g, n, "F") == Poly()
        assert cofactor_poly(f, g, n, "G") == Poly([1])
        assert subresultant(f, g, n) == g
    if m <= n:
        assert cofactor_poly(f, g, m - 1, "G") == Poly([1])
    if n <= m:
        assert cofactor_poly(f, g, n - 1, "F") == Poly([(-1) ** (m - n + 1)])


@pytest.mark.parametrize("m, n", PAIRS)
def test_resultant_product_formula(m, n):
    for seed in range(3):
        A, B = random_rootlists(m, n, 100 + seed, 20)
        f, g = poly_from_roots(A), poly_from_roots(B)
        via_f = Fraction(1)
        for a in A:
            via_f *= g(a)
        via_g = Fraction(1)
        for b in B:
            via_g *= f(b)
        assert resultant(f, g) == via_f == (-1) ** (m * n) * via_g


def test_common_root_forces_zero_resultant():
    rng = random.Random(4)
    for _ in range(20):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        A, B = random_rootlists(m, n, rng.randrange(10**6), 20)
        B = list(B)
        B[rng.randrange(n)] = rng.choice(A)
        f, g = poly_from_roots(A), poly_from_roots(B)
        assert resultant(f, g) == 0
        assert subresultant(f, g, 0) == Poly()


def test_distinct_roots_give_nonzero_resultant():
    rng = random.Random(8)
    for _ in range(20):
        pool = rng.sample(range(-20, 21), 8)
        A, B = pool[:rng.randint(1, 4)], pool[4:4 + rng.randint(1, 4)]
        assert resultant(poly_from_roots(A), poly_from_roots(B)) != 0


def test_resultant_matches_sympy():
    sympy = pytest.importorskip("sympy")
    x = sympy.Symbol("x")
    rng = random.Random(2)
    for _ in range(10):
        A, B = random_rootlists(rng.randint(1, 4), rng.randint(1, 4), rng.randrange(10**6), 20)
        fs = sympy.prod([x - a for a in A])
        gs = sympy.prod([x - b for b in B])
        assert resultant(poly_from_roots(A), poly_from_roots(B)) == Fraction(int(sympy.resultant(fs, gs, x)))
