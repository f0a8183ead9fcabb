"""Closed formulas for Sylvester's double sums and exact checks against the definition.

:func:`expected_sylv` evaluates the closed form of ``Sylv^{p,q}(A, B)`` in
terms of ``f = R(x, A)``, ``g = R(x, B)``, their subresultants and cofactors.
The ``verify_*`` functions compare closed forms (and the specialization
identities used to prove them) with :func:`sylvester_double_sum` at exact
rational roots and return one :class:`CheckReport` per identity instance.

Every identity involved is polynomial in the roots, so agreement at random
rational root configurations is strong evidence; it is not a proof.
"""

from __future__ import annotations

import enum
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Union

from .double_sum import RootList, SylvParams, r_product, sylvester_double_sum
from .errors import BoundTooSmall, IndexOutOfRange, NegativeN, Unordered
from .exact_poly import Poly, poly_div_linear, poly_from_roots
from .subres import cofactors as _cofactors

PASS, FAIL, SKIP = "pass", "fail", "skip"


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero when ``k < 0`` or ``k > n``."""
    if n < 0:
        raise NegativeN(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


# The theorem re-evaluates the same few cofactor pairs for every (p, q).
cofactors = lru_cache(maxsize=4096)(_cofactors)


def sres(f: Poly, g: Poly, k: int) -> Poly:
    F, G = cofactors(f, g, k)
    return F * f + G * g


class CaseTag(enum.Enum):
    SMALL_K = "small_k"
    ZERO_BAND = "zero_band"
    BIG_K = "big_k"
    CORNER_MN = "corner_mn"


def classify_case(params: SylvParams) -> CaseTag:
    """Which branch of the closed form applies; ``k = m = n-1`` counts as SMALL_K."""
    m, n, k = params.m, params.n, params.k
    if m > n:
        raise Unordered(f"classify_case needs m <= n, got m={m}, n={n}")
    if m < 1:
        raise IndexOutOfRange("m must be at least 1")
    if (params.p, params.q) == (m, n):
        return CaseTag.CORNER_MN
    if k <= m and (m < n or k <= m - 1):
        return CaseTag.SMALL_K
    if m < n and m + 1 <= k <= n - 2:
        return CaseTag.ZERO_BAND
    return CaseTag.BIG_K


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def small_k_value(f: Poly, g: Poly, params: SylvParams) -> Poly:
    p, k = params.p, params.k
    return sres(f, g, k) * (_sign(p * (params.m - k)) * binomial(k, p))


def big_k_value(f: Poly, g: Poly, params: SylvParams) -> Poly:
    kb, pb, qb = params.kbar, params.pbar, params.qbar
    F, G = cofactors(f, g, kb)
    return (F * f * binomial(kb, pb) - G * g * binomial(kb, qb)) * _sign(params.c)


def _kbar_in_range(params: SylvParams) -> bool:
    m, n, kb = params.m, params.n, params.kbar
    return 0 <= kb <= m if m < n else 0 <= kb <= m - 1


def _k_in_small_range(params: SylvParams) -> bool:
    m, n, k = params.m, params.n, params.k
    return k <= m if m < n else k <= m - 1


def expected_sylv(A: Iterable, B: Iterable, p: int, q: int) -> Poly:
    """Closed form of ``Sylv^{p,q}(A, B)`` via subresultants and cofactors.

    Inputs with ``|A| > |B|`` are reduced to the swapped pair using
    ``Sylv^{p,q}(A,B) = (-1)^(pq + (m-p)(n-q)) Sylv^{q,p}(B,A)``.
    """
    A, B = RootList(A), RootList(B)
    params = SylvParams(len(A), len(B), p, q)
    if params.m > params.n:
        return expected_sylv(B, A, q, p) * _sign(p * q + params.pbar * params.qbar)
    f, g = poly_from_roots(A), poly_from_roots(B)
    tag = classify_case(params)
    if tag is CaseTag.SMALL_K:
        return small_k_value(f, g, params)
    if tag is CaseTag.ZERO_BAND:
        return Poly()
    if tag is CaseTag.BIG_K:
        return big_k_value(f, g, params)
    return f * g * r_product(A, B)


@dataclass
class CheckReport:
    identity: str
    m: int
    n: int
    p: int | None
    q: int | None
    k: int | None
    trial: int
    status: str
    lhs: Poly | None = field(default=None, repr=False)
    rhs: Poly | None = field(default=None, repr=False)
    A: RootList | None = field(default=None, repr=False)
    B: RootList | None = field(default=None, repr=False)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def sort_key(self):
        return (self.trial, _key(self.p), _key(self.q), self.identity, _key(self.k))

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "m": self.m,
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "k": self.k,
            "trial": self.trial,
            "status": self.status,
        }
        if self.status == FAIL:
            out["lhs"] = self.lhs.to_json()
            out["rhs"] = self.rhs.to_json()
            out["A"] = self.A.to_json()
            out["B"] = self.B.to_json()
        return out

    def to_text(self) -> str:
        idx = " ".join(
            f"{name}={value}" for name, value in (("p", self.p), ("q", self.q), ("k", self.k)) if value is not None
        )
        line = f"{self.status.upper():4} {self.identity} m={self.m} n={self.n} {idx} trial={self.trial}"
        if self.status == FAIL:
            line += f"\n     lhs = {self.lhs}\n     rhs = {self.rhs}\n     A = {list(self.A.to_json())} B = {list(self.B.to_json())}"
        return line


def _key(v):
    return -1 if v is None else v


def _poly(v: Union[Poly, Fraction, int]) -> Poly:
    return v if isinstance(v, Poly) else Poly([v])


def check(identity, lhs, rhs, A, B, *, p=None, q=None, k=None, trial=0) -> CheckReport:
    """Compare ``lhs`` and ``rhs`` exactly and record the outcome."""
    lhs, rhs = _poly(lhs), _poly(rhs)
    status = PASS if lhs == rhs else FAIL
    if k is None and p is not None and q is not None:
        k = p + q
    return CheckReport(identity, len(A), len(B), p, q, k, trial, status, lhs, rhs, RootList(A), RootList(B))


def skip(identity, A, B, *, p=None, q=None, k=None, trial=0) -> CheckReport:
    return CheckReport(identity, len(A), len(B), p, q, k, trial, SKIP)


def random_rootlists(m: int, n: int, seed: int, bound: int = 20) -> tuple[RootList, RootList]:
    """``m`` and ``n`` distinct integers from ``[-bound, bound]``; the two lists may overlap."""
    if m < 1 or n < 1:
        raise IndexOutOfRange(f"need m, n >= 1, got m={m}, n={n}")
    if bound < m + n:
        raise BoundTooSmall(f"bound {bound} < m + n = {m + n}")
    rng = random.Random(seed)
    pool = range(-bound, bound + 1)
    return RootList(rng.sample(pool, m)), RootList(rng.sample(pool, n))


def structured_rootlists(m: int, n: int, index: int) -> tuple[RootList, RootList]:
    """Deterministic root configuration number ``index``; spacings grow with the index."""
    A = RootList(i * (i + index + 1) + index for i in range(m))
    B = RootList(-j * (j + 2 * index + 1) - 1 + 2 * index for j in range(n))
    return A, B


def structured_count(m: int, n: int) -> int:
    # each coefficient of Sylv^{m,n} = Res f g has degree at most mn + m + n in the roots
    return m * n + m + n + 1


def trial_seed(seed: int, trial: int) -> int:
    return seed * 1_000_003 + trial


def _configurations(m, n, seed, trials, bound, deterministic):
    if deterministic:
        if m > 3 or n > 3:
            raise IndexOutOfRange("deterministic mode covers m, n <= 3")
        return [structured_rootlists(m, n, t) for t in range(structured_count(m, n))]
    return [random_rootlists(m, n, trial_seed(seed, t), bound) for t in range(trials)]


def _theorem_items(args):
    trial, A, B = args
    out = []
    for p in range(len(A) + 1):
        for q in range(len(B) + 1):
            out.append(
                check("sylv_theorem", sylvester_double_sum(A, B, p, q), expected_sylv(A, B, p, q), A, B,
                      p=p, q=q, trial=trial)
            )
    return out


def _run(fn, items, workers):
    if workers and workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(fn, items))
    else:
        chunks = [fn(item) for item in items]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=CheckReport.sort_key)
    return reports


def verify_theorem_sweep(m: int, n: int, seed: int = 0, trials: int = 3, *, bound: int = 20,
                         deterministic: bool = False, workers: int | None = None) -> list[CheckReport]:
    """Double sum vs closed form for every ``(p, q)`` in ``[0,m] x [0,n]``, per trial."""
    if m > n:
        raise Unordered(f"sweep needs m <= n, got m={m}, n={n}")
    if trials < 1:
        raise IndexOutOfRange("trials must be at least 1")
    configs = _configurations(m, n, seed, trials, bound, deterministic)
    return _run(_theorem_items, [(t, A, B) for t, (A, B) in enumerate(configs)], workers)


def verify_lemma_specializations(A: Iterable, B: Iterable, p: int, q: int, *, roots: str = "both",
                                 trial: int = 0) -> list[CheckReport]:
    """Specialize ``Sylv^{p,q}(A, B)`` at each root and compare with the smaller instance.

    At ``alpha`` in A (needs ``p < m``)::

        Sylv^{p,q}(A,B)(alpha) = (-1)^p coeff_{p+q}(Sylv^{p,q}(A - alpha, B)) R(alpha, B)

    At ``beta`` in B (needs ``q < n``)::

        Sylv^{p,q}(A,B)(beta) = (-1)^(q + m - p) coeff_{p+q}(Sylv^{p,q}(A, B - beta)) R(beta, A)

    ``roots`` picks ``"alpha"``, ``"beta"`` or ``"both"``.  Asking explicitly
    for a side whose bound fails raises :class:`IndexOutOfRange`; with
    ``"both"`` that side is reported as skipped.
    """
    A, B = RootList(A), RootList(B)
    m, n = len(A), len(B)
    params = SylvParams(m, n, p, q)
    if roots not in ("alpha", "beta", "both"):
        raise ValueError(f"roots must be 'alpha', 'beta' or 'both', got {roots!r}")
    if roots == "alpha" and p >= m:
        raise IndexOutOfRange(f"specializing at roots of f needs p < m, got p={p}, m={m}")
    if roots == "beta" and q >= n:
        raise IndexOutOfRange(f"specializing at roots of g needs q < n, got q={q}, n={n}")

    sylv = sylvester_double_sum(A, B, p, q)
    k = params.k
    reports = []
    if roots in ("alpha", "both"):
        if p < m:
            for i, alpha in enumerate(A):
                smaller = sylvester_double_sum(A.without(alpha), B, p, q)
                rhs = _sign(p) * smaller.coeff(k) * r_product([alpha], B)
                reports.append(check(f"sylv_at_alpha[{i}]", sylv(alpha), rhs, A, B, p=p, q=q, trial=trial))
        else:
            reports.append(skip("sylv_at_alpha", A, B, p=p, q=q, k=k, trial=trial))
    if roots in ("beta", "both"):
        if q < n:
            for j, beta in enumerate(B):
                smaller = sylvester_double_sum(A, B.without(beta), p, q)
                rhs = _sign(q + params.pbar) * smaller.coeff(k) * r_product([beta], A)
                reports.append(check(f"sylv_at_beta[{j}]", sylv(beta), rhs, A, B, p=p, q=q, trial=trial))
        else:
            reports.append(skip("sylv_at_beta", A, B, p=p, q=q, k=k, trial=trial))
    return reports


def verify_cofactor_specializations(A: Iterable, B: Iterable, k: int, *, trial: int = 0) -> list[CheckReport]:
    """Specialization of ``F_k``, ``G_k`` and ``Sres_k`` at the roots of ``g`` and ``f``.

    ``k`` must satisfy ``0 <= k < min(m, n)``.  The cofactor identities need
    ``k >= 1`` and are skipped at ``k = 0``; identities that would need a
    degree-0 quotient are skipped too.
    """
    A, B = RootList(A), RootList(B)
    m, n = len(A), len(B)
    if not 0 <= k < min(m, n):
        raise IndexOutOfRange(f"need 0 <= k < min(m, n) = {min(m, n)}, got k={k}")
    f, g = poly_from_roots(A), poly_from_roots(B)
    F, G = cofactors(f, g, k)
    S = F * f + G * g
    reports = []
    kw = dict(k=k, trial=trial)

    if n >= 2:
        for j, beta in enumerate(B):
            g1 = poly_div_linear(g, beta)
            if k >= 1:
                F_prev, _ = cofactors(f, g1, k - 1)
                reports.append(check(f"cofactor_F_at_beta[{j}]", F(beta), -F_prev.coeff(n - k - 1), A, B, **kw))
                reports.append(check(
                    f"principal_bridge[{j}]",
                    F_prev.coeff(n - k - 1),
                    _sign(m - k - 1) * sres(f, g1, k).coeff(k),
                    A, B, **kw,
                ))
            reports.append(check(
                f"sres_at_beta[{j}]", S(beta), _sign(m - k) * sres(f, g1, k).coeff(k) * f(beta), A, B, **kw
            ))
    else:
        reports.append(skip("sres_at_beta", A, B, **kw))
    if k == 0 or n < 2:
        reports.append(skip("cofactor_F_at_beta", A, B, **kw))
        reports.append(skip("principal_bridge", A, B, **kw))

    if m >= 2:
        for i, alpha in enumerate(A):
            f1 = poly_div_linear(f, alpha)
            if k >= 1:
                _, G_prev = cofactors(f1, g, k - 1)
                reports.append(check(
                    f"cofactor_G_at_alpha[{i}]", G(alpha), _sign(m - k - 1) * G_prev.coeff(m - k - 1), A, B, **kw
                ))
            reports.append(check(f"sres_at_alpha[{i}]", S(alpha), sres(f1, g, k).coeff(k) * g(alpha), A, B, **kw))
    else:
        reports.append(skip("sres_at_alpha", A, B, **kw))
    if k == 0 or m < 2:
        reports.append(skip("cofactor_G_at_alpha", A, B, **kw))
    return reports


def _valid_sres_indices(m: int, n: int) -> list[int]:
    top = min(m, n) + (1 if m != n else 0)
    return list(range(top))


def verify_corollaries(A: Iterable, B: Iterable, *, trial: int = 0) -> list[CheckReport]:
    """Every named consequence of the closed form that applies to ``(|A|, |B|)``.

    The pair is ordered so that ``m <= n`` first.  Identity families that
    have no instance at this ``(m, n)`` produce a single skip report.
    """
    A, B = RootList(A), RootList(B)
    if len(A) > len(B):
        A, B = B, A
    m, n = len(A), len(B)
    f, g = poly_from_roots(A), poly_from_roots(B)
    res = r_product(A, B)
    reports: list[CheckReport] = []
    families = set()

    def add(report: CheckReport, family: str):
        families.add(family)
        reports.append(report)

    def ck(name, lhs, rhs, **kw):
        add(check(name, lhs, rhs, A, B, trial=trial, **kw), name.split("[")[0])

    sylv = {(p, q): sylvester_double_sum(A, B, p, q) for p in range(m + 1) for q in range(n + 1)}

    # corners
    ck("corner_00", sylv[0, 0], res, p=0, q=0)
    ck("corner_m0", sylv[m, 0], f, p=m, q=0)
    ck("corner_0n", sylv[0, n], g, p=0, q=n)
    ck("corner_mn", sylv[m, n], f * g * res, p=m, q=n)
    ck("resultant_product", res, _sign(m * n) * r_product(B, A))

    # boundary cofactors, straight from the determinant code
    if m < n:
        F, G = cofactors(f, g, m)
        ck("F_m_is_one", F, 1, k=m)
        ck("G_m_is_zero", G, 0, k=m)
        ck("sres_m_is_f", sres(f, g, m), f, k=m)
        F, G = cofactors(g, f, m)
        ck("swapped_F_n_is_zero", F, 0, k=m)
        ck("swapped_G_n_is_one", G, 1, k=m)
    F, G = cofactors(f, g, m - 1)
    ck("G_m_minus_1_is_one", G, 1, k=m - 1)
    F, G = cofactors(g, f, m - 1)
    ck("swapped_F_n_minus_1_sign", F, _sign(n - m + 1), k=m - 1)

    # exchange symmetries
    for k in _valid_sres_indices(m, n):
        ck("sres_exchange", sres(g, f, k), sres(f, g, k) * _sign((m - k) * (n - k)), k=k)
        if k < min(m, n):
            G_fg = cofactors(f, g, k)[1]
            F_gf = cofactors(g, f, k)[0]
            for i, alpha in enumerate(A):
                ck(f"cofactor_exchange_at_alpha[{i}]", G_fg(alpha),
                   F_gf(alpha) * _sign((n - k) * (m - k)), k=k)
    for (p, q), value in sylv.items():
        params = SylvParams(m, n, p, q)
        ck("sylv_exchange", value,
           sylvester_double_sum(B, A, q, p) * _sign(p * q + params.pbar * params.qbar), p=p, q=q)

    for (p, q), value in sylv.items():
        params = SylvParams(m, n, p, q)
        k = params.k
        kb, pb, qb = params.kbar, params.pbar, params.qbar
        if (p, q) != (m, n) and _kbar_in_range(params):
            ck("large_k_formula", value, big_k_value(f, g, params), p=p, q=q)
            F, G = cofactors(f, g, kb)
            S = F * f + G * g
            sgn = _sign(params.c)
            ck("uniform_sres_g", value, (S * binomial(kb, pb) - G * g * binomial(kb + 1, qb)) * sgn, p=p, q=q)
            ck("uniform_f_sres", value, (F * f * binomial(kb + 1, pb) - S * binomial(kb, qb)) * sgn, p=p, q=q)
        if _k_in_small_range(params):
            F, G = cofactors(f, g, k)
            ck("uniform_small_k", value,
               (F * f * binomial(k, p) + G * g * binomial(k, q)) * _sign(p * (m - k)), p=p, q=q)
        if k == m == n - 1:
            small, big = small_k_value(f, g, params), big_k_value(f, g, params)
            ck("covered_twice", small, big, p=p, q=q)
            ck("covered_twice_vs_sum", value, small, p=p, q=q)
        if q == n and p <= m - 1:
            G = cofactors(f, g, pb - 1)[1]
            ck("edge_column_q_eq_n", value, G * g * _sign(p), p=p, q=q)
        if p == m and ((m < n and n - m - 1 <= q <= n - 1) or (m == n and q <= m - 1)):
            F = cofactors(f, g, qb - 1)[0]
            ck("edge_row_p_eq_m", value, F * f * _sign(n - m - 1 + n * q), p=p, q=q)
        if m == n and k == m:
            ck("equal_degree_diagonal", value, f * binomial(m - 1, q) + g * binomial(m - 1, p), p=p, q=q)
        if m == n - 2 and k == n - 1:
            ck("near_diagonal_multiple", value, f * (_sign(p + 1) * binomial(m, p)), p=p, q=q)
        if m < n and k == m:
            ck("k_eq_m_multiple", value, f * binomial(m, p), p=p, q=q)
        if m + 1 <= k <= n - 2:
            ck("zero_band", value, Poly(), p=p, q=q)

    for family in IDENTITY_FAMILIES:
        if family not in families:
            reports.append(skip(family, A, B, trial=trial))
    reports.sort(key=CheckReport.sort_key)
    return reports


IDENTITY_FAMILIES = (
    "corner_00", "corner_m0", "corner_0n", "corner_mn", "resultant_product",
    "F_m_is_one", "G_m_is_zero", "sres_m_is_f", "swapped_F_n_is_zero", "swapped_G_n_is_one",
    "G_m_minus_1_is_one", "swapped_F_n_minus_1_sign",
    "sres_exchange", "cofactor_exchange_at_alpha", "sylv_exchange",
    "large_k_formula", "uniform_sres_g", "uniform_f_sres", "uniform_small_k",
    "covered_twice", "covered_twice_vs_sum",
    "edge_column_q_eq_n", "edge_row_p_eq_m",
    "equal_degree_diagonal", "near_diagonal_multiple", "k_eq_m_multiple", "zero_band",
)


def _specialization_items(args):
    trial, A, B = args
    m, n = len(A), len(B)
    out = []
    for p in range(m + 1):
        for q in range(n + 1):
            out.extend(verify_lemma_specializations(A, B, p, q, trial=trial))
    for k in range(min(m, n)):
        out.extend(verify_cofactor_specializations(A, B, k, trial=trial))
    return out


def _corollary_items(args):
    trial, A, B = args
    return verify_corollaries(A, B, trial=trial)


def specialization_suite(m: int, n: int, seed: int = 0, trials: int = 3, *, bound: int = 20,
                         deterministic: bool = False, workers: int | None = None) -> list[CheckReport]:
    """All root specializations for every ``(p, q)`` and every valid ``k``."""
    configs = _configurations(m, n, seed, trials, bound, deterministic)
    return _run(_specialization_items, [(t, A, B) for t, (A, B) in enumerate(configs)], workers)


def named_identity_suite(m: int, n: int, seed: int = 0, trials: int = 3, *, bound: int = 20,
                         deterministic: bool = False, workers: int | None = None) -> list[CheckReport]:
    configs = _configurations(m, n, seed, trials, bound, deterministic)
    return _run(_corollary_items, [(t, A, B) for t, (A, B) in enumerate(configs)], workers)


def summarize(reports: Iterable[CheckReport]) -> dict:
    counts = {PASS: 0, FAIL: 0, SKIP: 0}
    for r in reports:
        counts[r.status] += 1
    return counts
