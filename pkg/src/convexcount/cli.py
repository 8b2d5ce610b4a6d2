"""Command-line front end.

Exit codes: 0 success, 1 identity failure, 2 usage, 3 feasibility bound,
4 route disagreement.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import counting, lattice, series, sweeps
from .errors import FeasibilityError, HypothesisError

EXIT_OK = 0
EXIT_IDENTITY = 1
EXIT_USAGE = 2
EXIT_FEASIBILITY = 3
EXIT_DISAGREE = 4

ROUTES = ("closed", "quadruple", "bruteforce")
IDENTITIES = (
    "jacobi",
    "eq-delta",
    "s3-gf",
    "s4-gf",
    "bisection",
    "decomposition",
    "chu-vandermonde",
    "lemma1",
    "telescoping",
)


class UsageError(Exception):
    pass


def _rect(route: str, m: int, n: int) -> int:
    if route == "closed":
        return counting.count_rect(m, n)
    if route == "quadruple":
        return counting.quadruple_sum(m, n)
    return lattice.count_convex_bruteforce(m, n)


def _perimeter(route: str, N: int) -> int:
    if route == "closed":
        return counting.count_perimeter(N)
    total = N + 2
    if route == "bruteforce" and total > lattice.max_brute():
        raise FeasibilityError(f"m + n = {total} exceeds the brute-force bound {lattice.max_brute()}")
    return sum(_rect(route, m, total - m) for m in range(total + 1))


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        start = int(lo)
        stop = int(hi) if sep else start
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or A, got {text!r}") from None
    if start < 0 or stop < start:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return range(start, stop + 1)


def _routes(text: str) -> list[str]:
    names = [r.strip() for r in text.split(",") if r.strip()]
    bad = [r for r in names if r not in ROUTES]
    if not names or bad:
        raise argparse.ArgumentTypeError(f"routes must be a subset of {','.join(ROUTES)}")
    return list(dict.fromkeys(names))


def cmd_count(args, out) -> int:
    if args.kind == "rect":
        if len(args.values) != 2:
            raise UsageError("count rect needs <m> <n>")
        m, n = args.values
        out.write(f"{_rect(args.route, m, n)}\n")
    else:
        if len(args.values) != 1:
            raise UsageError("count perimeter needs <N>")
        out.write(f"{_perimeter(args.route, args.values[0])}\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    cells = [(m, n) for m in args.m for n in args.n]
    if "bruteforce" in args.routes:
        bound = lattice.max_brute()
        worst = max(m + n for m, n in cells)
        if worst > bound:
            raise FeasibilityError(f"m + n = {worst} exceeds the brute-force bound {bound}")
    rows = []
    flagged = False
    for m, n in cells:
        values = {r: _rect(r, m, n) for r in args.routes}
        row = {"m": m, "n": n, **values}
        if len(args.routes) > 1:
            row["agree"] = len(set(values.values())) == 1
            flagged |= not row["agree"]
        rows.append(row)
    if args.format == "json":
        out.write(json.dumps(rows) + "\n")
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["m", "n", *args.routes] + (["agree"] if len(args.routes) > 1 else [])
        writer.writerow(header)
        for row in rows:
            cells_out = [row[h] for h in header]
            if "agree" in row:
                cells_out[-1] = "yes" if row["agree"] else "no"
            writer.writerow(cells_out)
        out.write(buf.getvalue())
    return EXIT_DISAGREE if flagged else EXIT_OK


def cmd_breakdown(args, out) -> int:
    if args.m < 1 or args.n < 1:
        raise UsageError("breakdown requires m, n >= 1")
    bd = counting.breakdown(args.m, args.n, check=False)
    lines = [
        f"m={bd.m} n={bd.n}",
        f"S0 {bd.s0}",
    ]
    for k in ("s1", "s2", "s3", "s4"):
        lines.append(f"{k.upper()} raw {getattr(bd, k)} closed {bd.closed_forms[k]}")
    lines.append(f"S5 raw {bd.s5} closed 0")
    lines.append(f"quadruple {bd.quadruple}")
    lines.append(f"closed {bd.closed}")
    failures = bd.failures()
    lines.append("PASS" if not failures else "FAIL " + "; ".join(failures))
    out.write("\n".join(lines) + "\n")
    return EXIT_OK if not failures else EXIT_IDENTITY


def _series_sides(args):
    D = args.degree
    if args.identity == "jacobi":
        return series.jacobi_sides(args.alpha, args.beta, D if D is not None else series.DEFAULT_DEGREE)
    default = 14 if args.identity == "bisection" else series.DEFAULT_DEGREE
    D = D if D is not None else default
    return {
        "eq-delta": series.eq_delta_sides,
        "s3-gf": series.s3_gf_sides,
        "s4-gf": series.s4_gf_sides,
        "bisection": series.bisection_sides,
    }[args.identity](D)


def cmd_verify(args, out) -> int:
    ident = args.identity
    if ident in ("jacobi", "eq-delta", "s3-gf", "s4-gf", "bisection"):
        sides = _series_sides(args)
        if args.dump:
            out.write(series.dump(sides[0][1]) + "\n")
        for label, lhs, rhs in sides:
            bad = series.first_mismatch(lhs, rhs)
            if bad is not None:
                i, j = bad
                out.write(f"FAIL {label} at ({i}, {j}): {lhs.coeff(i, j)} != {rhs.coeff(i, j)}\n")
                return EXIT_IDENTITY
        out.write("PASS\n")
        return EXIT_OK
    if args.dump:
        raise UsageError(f"--dump applies only to series identities, not {ident}")
    if ident == "decomposition":
        problem = sweeps.sweep_decomposition(args.max if args.max is not None else 10)
    elif ident == "chu-vandermonde":
        problem = sweeps.sweep_chu_vandermonde(args.samples, args.seed)
    elif ident == "lemma1":
        problem = sweeps.sweep_path_pairs(args.max if args.max is not None else 5)
    else:
        problem = sweeps.sweep_telescoping(args.max if args.max is not None else 12)
    if problem:
        out.write(f"FAIL {problem}\n")
        return EXIT_IDENTITY
    out.write("PASS\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    if args.format == "count":
        out.write(f"{lattice.count_convex_bruteforce(args.m, args.n)}\n")
    else:
        blocks = [lattice.to_ascii(p) for p in lattice.enumerate_convex(args.m, args.n)]
        out.write("\n\n".join(blocks) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convexcount",
        description="Count convex polyominoes and verify the identities behind the count.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count by bounding box or by perimeter")
    p.add_argument("kind", choices=("rect", "perimeter"))
    p.add_argument("values", type=_nonneg, nargs="+", metavar="INT")
    p.add_argument("--route", choices=ROUTES, default="closed")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="tabulate |P(m,n)| over a grid")
    p.add_argument("--m", type=_range, default=_range("0..3"), help="range A..B (default 0..3)")
    p.add_argument("--n", type=_range, default=_range("0..3"), help="range A..B (default 0..3)")
    p.add_argument("--routes", type=_routes, default=["closed"], help="comma list of routes")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("breakdown", help="print S0..S5 for one (m, n)")
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.set_defaults(func=cmd_breakdown)

    p = sub.add_parser("verify", help="check one identity exactly")
    p.add_argument("identity", choices=IDENTITIES)
    p.add_argument("--degree", type=_nonneg, default=None, help="truncation degree")
    p.add_argument("--alpha", type=_nonneg, default=0)
    p.add_argument("--beta", type=_nonneg, default=0)
    p.add_argument("--max", type=_nonneg, default=None, help="grid bound for finite identities")
    p.add_argument("--samples", type=_nonneg, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dump", action="store_true", help="print left-side coefficients first")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list the members of P(m, n)")
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("--format", choices=("ascii", "count"), default="ascii")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except FeasibilityError as exc:
        print(f"convexcount: {exc}", file=sys.stderr)
        return EXIT_FEASIBILITY
    except (UsageError, HypothesisError, ValueError) as exc:
        print(f"convexcount: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
