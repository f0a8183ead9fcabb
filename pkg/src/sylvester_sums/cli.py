"""Command line front end.

Exit codes: 0 success (all checks pass), 1 some check failed, 2 usage error,
3 mathematically invalid input.  JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import verify as V
from .double_sum import RootList, sylvester_double_sum
from .errors import SylvesterError
from .exact_poly import Poly, format_rational, parse_rational, poly_from_roots
from .subres import cofactors, principal_coeff, subresultant

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_MATH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Command:
    subcommand: str
    options: dict


def _roots(text: str) -> list[Fraction]:
    text = text.strip()
    if not text:
        return []
    try:
        return [parse_rational(part) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sylvester-sums", description="Sylvester double sums and subresultants, exactly.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=("json", "text"), default="json")

    def roots(p, need_b=True):
        p.add_argument("--A", type=_roots, required=True, metavar="R1,R2,...")
        if need_b:
            p.add_argument("--B", type=_roots, required=True, metavar="R1,R2,...")

    p = sub.add_parser("from-roots", help="expand prod (x - r)")
    roots(p, need_b=False)
    common(p)

    for name, help_ in (("sylv", "double sum from its definition"), ("expected", "closed form of the double sum")):
        p = sub.add_parser(name, help=help_)
        roots(p)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        common(p)

    p = sub.add_parser("subres", help="k-th subresultant of R(x,A) and R(x,B)")
    roots(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--principal", action="store_true", help="emit only the coefficient of x^k")
    common(p)

    p = sub.add_parser("cofactors", help="F_k, G_k and F_k f + G_k g")
    roots(p)
    p.add_argument("--k", type=int, required=True)
    common(p)

    p = sub.add_parser("verify", help="check the closed form against the double sum")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--bound", type=int, default=20)
    p.add_argument("--deterministic", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    common(p)

    p = sub.add_parser("selftest", help="worked examples plus sweeps for 1 <= m <= n <= 4")
    common(p)
    return parser


def _attach_root_values(argv: list[str]) -> list[str]:
    # argparse reads "--B -3,5" as two flags; "--B=-3,5" is unambiguous
    out, i = [], 0
    while i < len(argv):
        if argv[i] in ("--A", "--B") and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def parse_args(argv: list[str]) -> Command:
    ns = _build_parser().parse_args(_attach_root_values(list(argv)))
    options = vars(ns)
    return Command(options.pop("subcommand"), options)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _poly_out(poly: Poly, fmt: str) -> str:
    return _dumps({"poly": poly.to_json()}) if fmt == "json" else str(poly)


def _reports_out(reports, fmt: str) -> str:
    counts = V.summarize(reports)
    if fmt == "json":
        lines = [_dumps(r.to_json()) for r in reports]
        lines.append(_dumps({"summary": counts}))
    else:
        lines = [r.to_text() for r in reports]
        lines.append(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skip']} skipped")
    return "\n".join(lines)


def _selftest() -> list[V.CheckReport]:
    A, B = RootList([1, 2]), RootList([3, 4, 5])
    f, g = poly_from_roots(A), poly_from_roots(B)
    F1, G1 = cofactors(f, g, 1)
    F2, G2 = cofactors(f, g, 2)
    worked = [
        ("worked_resultant", subresultant(f, g, 0), Poly([144])),
        ("worked_sres_1", subresultant(f, g, 1), Poly([-42, 18])),
        ("worked_F_1", F1, Poly([9, -1])),
        ("worked_G_1", G1, Poly([1])),
        ("worked_sres_2", subresultant(f, g, 2), f),
        ("worked_F_2", F2, Poly([1])),
        ("worked_G_2", G2, Poly()),
        ("worked_sylv_0_1", sylvester_double_sum(A, B, 0, 1), Poly([-42, 18])),
        ("worked_sylv_1_1", sylvester_double_sum(A, B, 1, 1), Poly([4, -6, 2])),
        ("worked_sylv_2_3", sylvester_double_sum(A, B, 2, 3), f * g * 144),
    ]
    reports = [V.check(name, lhs, rhs, A, B, trial=-1) for name, lhs, rhs in worked]
    a1, b1 = RootList([2]), RootList([5])
    for p in range(2):
        for q in range(2):
            reports.append(V.check("worked_m1_n1_corner", sylvester_double_sum(a1, b1, p, q),
                                   V.expected_sylv(a1, b1, p, q), a1, b1, p=p, q=q, trial=-1))
    for m in range(1, 5):
        for n in range(m, 5):
            reports.extend(V.verify_theorem_sweep(m, n, seed=2024, trials=1))
            reports.extend(V.named_identity_suite(m, n, seed=2024, trials=1))
    return reports


def execute(cmd: Command) -> tuple[int, str]:
    o = cmd.options
    fmt = o.get("format", "json")
    name = cmd.subcommand
    if name == "from-roots":
        return EXIT_OK, _poly_out(poly_from_roots(RootList(o["A"])), fmt)
    if name in ("sylv", "expected", "subres", "cofactors"):
        A, B = RootList(o["A"]), RootList(o["B"])
    if name == "sylv":
        return EXIT_OK, _poly_out(sylvester_double_sum(A, B, o["p"], o["q"]), fmt)
    if name == "expected":
        return EXIT_OK, _poly_out(V.expected_sylv(A, B, o["p"], o["q"]), fmt)
    if name == "subres":
        f, g = poly_from_roots(A), poly_from_roots(B)
        if o["principal"]:
            value = principal_coeff(f, g, o["k"])
            return EXIT_OK, _dumps({"value": format_rational(value)}) if fmt == "json" else str(value)
        return EXIT_OK, _poly_out(subresultant(f, g, o["k"]), fmt)
    if name == "cofactors":
        f, g = poly_from_roots(A), poly_from_roots(B)
        F, G = cofactors(f, g, o["k"])
        recombined = F * f + G * g
        if fmt == "json":
            return EXIT_OK, _dumps({"F": F.to_json(), "G": G.to_json(), "recombined": recombined.to_json()})
        return EXIT_OK, f"F = {F}\nG = {G}\nF*f + G*g = {recombined}"
    if name == "verify":
        reports = V.verify_theorem_sweep(o["m"], o["n"], o["seed"], o["trials"], bound=o["bound"],
                                         deterministic=o["deterministic"], workers=o["workers"])
    elif name == "selftest":
        reports = _selftest()
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown subcommand {name!r}")
    code = EXIT_FAIL if any(r.status == V.FAIL for r in reports) else EXIT_OK
    return code, _reports_out(reports, fmt)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cmd = parse_args(argv)
        start = time.perf_counter()
        code, text = execute(cmd)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SylvesterError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_MATH
    sys.stdout.write(text + "\n")
    if cmd.subcommand in ("verify", "selftest"):
        print(f"elapsed {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
