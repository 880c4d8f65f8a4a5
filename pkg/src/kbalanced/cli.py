"""Command-line interface.

Exit status: 0 on success (or all checks passing), 1 when a verification
check fails, 2 for usage errors and rejected queries.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import chebyshev, lattice, oracle, reconcile, transfer
from .bigpoly import RatFunc, series_expand
from .report import Report

FAMILIES = ("f", "g", "F", "G", "Fbar", "Gbar", "H", "Hbar", "R", "bad", "good")
PATH_FAMILIES = {
    # family -> (lower bound as multiple of -k, terminal)
    "F": (0, "ground"),
    "G": (0, "top"),
    "Fbar": (1, "ground"),
    "Gbar": (1, "top"),
    "H": (0, "any"),
    "Hbar": (1, "any"),
}
SUITES = ("cheb", "tables", "transfer", "reconcile", "oracle", "all")


class UsageError(Exception):
    pass


def family_rat(family: str, k: int) -> RatFunc:
    """Closed-form generating function for any CLI family name."""
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}")
    try:
        if family == "f":
            return transfer.f_balanced(k)
        if family == "bad":
            return transfer.bad_walk_gf(k)
        if family == "good":
            return transfer.good_walk_gf(k)
        return lattice.family_gf(family, k)
    except ValueError as exc:
        raise UsageError(f"family {family} with k={k}: {exc}") from None


def path_spec(family: str, k: int) -> oracle.PathSpec:
    neg, terminal = PATH_FAMILIES[family]
    return oracle.PathSpec(-k * neg, k, terminal)


def record(kind: str, params: dict, payload: dict) -> str:
    def strs(v):
        if isinstance(v, bool) or v is None:
            return v
        if isinstance(v, int):
            return str(v)
        if isinstance(v, (list, tuple)):
            return [strs(x) for x in v]
        if isinstance(v, dict):
            return {key: strs(x) for key, x in v.items()}
        return v

    return json.dumps({"kind": kind, "params": strs(params), "payload": strs(payload)}, sort_keys=True)


# -- verification suites ---------------------------------------------------

def suite_cheb(k_max: int) -> Report:
    rep = chebyshev.golden_table_check()
    for k in range(max(k_max, 7) + 1):
        for kind in "TU":
            rep.add("cheb", f"{kind}_k recurrence = explicit sum", k,
                    chebyshev.cheb(kind, k) == chebyshev.cheb_explicit(kind, k))
    rep.extend(chebyshev.cheb_identity_check(k_max))
    return rep


def suite_tables(k_max: int) -> Report:
    rep = lattice.verify_table_recurrences(k_max)
    rep.extend(lattice.verify_r_remarks(max(1, k_max // 2)))
    return rep


def suite_reconcile(k_max: int) -> Report:
    rep = reconcile.verify_reconciliation(k_max, k_min=0, series_terms=64)
    rep.add("reconcile", "misindexed cross-term C_k A_{k+1} - C_{k-1} A_k = W_k fails", 2,
            not reconcile.misindexed_cross_term_holds(2))
    return rep


def _first_mismatch(series, counts) -> str:
    for n, (a, b) in enumerate(zip(series, counts)):
        if a != b:
            return f"n={n}: series {a}, oracle {b}"
    return ""


def suite_oracle(k_max: int, n_max: int) -> Report:
    rep = Report()
    terms = n_max + 1
    for k in range(k_max + 1):
        strings = [oracle.count_balanced_strings(k, n) for n in range(terms)]
        for fam in ("f", "g"):
            s = series_expand(family_rat(fam, k), terms).terms
            rep.add("oracle", f"{fam}_k series = k-balanced string counts", k,
                    list(s) == strings, _first_mismatch(s, strings))
        extent = [oracle.count_extent_paths(k, n) for n in range(terms)]
        rep.add("oracle", "extent-path counts = k-balanced string counts", k,
                extent == strings, _first_mismatch(extent, strings))
        for fam in PATH_FAMILIES:
            s = series_expand(family_rat(fam, k), terms).terms
            spec = path_spec(fam, k)
            counts = [oracle.count_paths(spec, n) for n in range(terms)]
            rep.add("oracle", f"{fam}_k series = path counts", k,
                    list(s) == counts, _first_mismatch(s, counts))
            # path DP against exhaustive enumeration while that stays cheap
            small = [n for n in range(terms) if spec.steps_for(n) <= 14]
            rep.add("oracle", f"{fam}_k path DP = exhaustive path count", k,
                    all(counts[n] == oracle.count_paths_exhaustive(spec, n) for n in small))
    for k in range(3, max(k_max, 3) + 1):
        bad = series_expand(transfer.bad_walk_gf(k), terms).terms
        good = series_expand(transfer.good_walk_gf(k), terms).terms
        miss = [oracle.count_walks(k, n, False) for n in range(terms)]
        cover = [oracle.count_walks(k, n, True) for n in range(terms)]
        rep.add("oracle", "bad-walk series = walk counts", k, list(bad) == miss, _first_mismatch(bad, miss))
        rep.add("oracle", "good-walk series = walk counts", k, list(good) == cover, _first_mismatch(good, cover))
        strings = [oracle.count_balanced_strings(k - 2, n) for n in range(terms)]
        rep.add("oracle", "bad walks on C_k = (k-2)-balanced strings", k,
                miss == strings, _first_mismatch(miss, strings))
    return rep


def run_suite(suite: str, k_max: int, n_max: int) -> Report:
    if suite == "all":
        rep = Report()
        for s in SUITES[:-1]:
            rep.extend(run_suite(s, k_max, n_max))
        return rep
    if suite == "cheb":
        return suite_cheb(k_max)
    if suite == "tables":
        return suite_tables(k_max)
    if suite == "transfer":
        return transfer.verify_transfer(k_max)
    if suite == "reconcile":
        return suite_reconcile(k_max)
    if suite == "oracle":
        return suite_oracle(k_max, n_max)
    raise UsageError(f"unknown suite {suite!r}")


# -- commands --------------------------------------------------------------

def cmd_coeffs(args, out) -> int:
    if args.terms < 1:
        raise UsageError("--terms must be >= 1")
    terms = series_expand(family_rat(args.family, args.k), args.terms).terms
    if args.format == "plain":
        out.write(" ".join(str(t) for t in terms) + "\n")
    elif args.format == "csv":
        out.write("n,coefficient\n")
        for n, t in enumerate(terms):
            out.write(f"{n},{t}\n")
    else:
        out.write(record("series", {"family": args.family, "k": args.k, "terms": args.terms},
                         {"coefficients": list(terms)}) + "\n")
    return 0


def cmd_gf(args, out) -> int:
    f = family_rat(args.family, args.k)
    num, den = list(f.num.coeffs) or [0], list(f.den.coeffs)
    if args.format == "plain":
        out.write("num " + " ".join(map(str, num)) + "\n")
        out.write("den " + " ".join(map(str, den)) + "\n")
    elif args.format == "csv":
        out.write("part,degree,coefficient\n")
        for part, cs in (("num", num), ("den", den)):
            for d, c in enumerate(cs):
                out.write(f"{part},{d},{c}\n")
    else:
        out.write(record("gf", {"family": args.family, "k": args.k}, {"num": num, "den": den}) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    if args.kmax < 1 or args.nmax < 1:
        raise UsageError("--kmax and --nmax must be >= 1")
    rep = run_suite(args.suite, args.kmax, args.nmax)
    if args.format == "json":
        out.write(record("verify", {"suite": args.suite, "kmax": args.kmax, "nmax": args.nmax},
                         {"checks": [c.as_record() for c in rep], "passed": rep.all_passed}) + "\n")
    else:
        for c in rep:
            out.write(c.line() + "\n")
        out.write(f"{len(rep) - len(rep.failures)}/{len(rep)} checks passed\n")
    return 0 if rep.all_passed else 1


def cmd_count(args, out) -> int:
    lower = args.lower if args.lower is not None else 0
    upper = args.upper if args.upper is not None else args.k
    query = oracle.CountQuery(args.what, args.k, args.n, args.cover, lower, upper, args.terminal)
    try:
        value = oracle.count(query)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        params = {"what": args.what, "k": args.k, "n": args.n}
        if args.what == "walks":
            params["cover"] = args.cover
        if args.what == "paths":
            params.update(lower=lower, upper=upper, terminal=args.terminal)
        out.write(record("count", params, {"count": value}) + "\n")
    elif args.format == "csv":
        out.write("n,count\n")
        out.write(f"{args.n},{value}\n")
    else:
        out.write(f"{value}\n")
    return 0


def cmd_cheb(args, out) -> int:
    build = chebyshev.cheb_explicit if args.explicit else chebyshev.cheb
    try:
        p = build(args.kind, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    coeffs = list(p.coeffs) or [0]
    if args.format == "json":
        out.write(record("cheb", {"kind": args.kind, "k": args.k}, {"coefficients": coeffs}) + "\n")
    elif args.format == "csv":
        out.write("degree,coefficient\n")
        for d, c in enumerate(coeffs):
            out.write(f"{d},{c}\n")
    else:
        out.write(" ".join(map(str, coeffs)) + "\n")
    return 0


def _parse_nodes(text: str) -> list[int]:
    tokens = text.replace(",", " ").split()
    try:
        return [int(t[1:] if t.lower().startswith("v") else t) for t in tokens]
    except ValueError:
        raise UsageError(f"cannot parse walk {text!r}") from None


def cmd_codec(args, out) -> int:
    try:
        if args.direction == "encode":
            bits = transfer.walk_string_codec("encode", args.k, _parse_nodes(args.input))
            if bits:
                out.write(bits + "\n")
        else:
            walk = transfer.walk_string_codec("decode", args.k, args.input.strip())
            out.write(" ".join(map(str, walk.nodes)) + "\n")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kbalanced",
        description="Generating functions for k-balanced strings, covering walks and bounded lattice paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = dict(choices=["plain", "csv", "json", "json-like"], default="plain")

    p = sub.add_parser("coeffs", help="series coefficients of a generating function")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--terms", type=int, default=16)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("gf", help="reduced numerator and denominator, lowest degree first")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", help="run identity and brute-force checks")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--nmax", type=int, default=14)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="brute-force counts")
    p.add_argument("--what", required=True, choices=["strings", "walks", "paths", "extent"])
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cover", action="store_true", help="walks: count covering walks")
    p.add_argument("--lower", type=int, help="paths: lower bound (default 0)")
    p.add_argument("--upper", type=int, help="paths: upper bound (default k)")
    p.add_argument("--terminal", choices=list(oracle.TERMINALS), default="ground")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("cheb", help="combinatorial Chebyshev polynomial coefficients")
    p.add_argument("--kind", required=True, choices=["T", "U"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--explicit", action="store_true", help="use the binomial sums")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_cheb)

    p = sub.add_parser("codec", help="walk <-> bit string on C_k")
    p.add_argument("--direction", required=True, choices=["encode", "decode"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--input", required=True, help="node list (encode) or bit string (decode)")
    p.set_defaults(func=cmd_codec)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "format", None) == "json-like":
        args.format = "json"
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"kbalanced: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
