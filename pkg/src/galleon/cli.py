"""Command-line surface.

Subcommands: count, table, series, verify, enumerate, asym.  Counts are
always printed as exact decimal integers; JSON output renders integers
beyond 2^53 as strings so nothing downstream silently rounds them.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 resource
bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import factorial

import mpmath as mp

from . import asymptotics, labeled, shapes, unlabeled, verify
from .counts import max_galls
from .series import NonIntegralCoefficientError, egf_to_counts, ogf_to_counts

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _json_int(v):
    return v if -(2**53) < v < 2**53 else str(v)


def _cell_methods(kind, n, g):
    """All applicable (method, value) pairs for a single cell."""
    values = {}
    if kind == "unlabeled":
        values["recursion"] = unlabeled.count_unlabeled(n, g)
        values["gf"] = unlabeled.count_by_gf(n, g)
        values["direct"] = unlabeled.count_by_direct(n, g)
        if g == 1:
            values["closed-form"] = unlabeled.unlabeled_gf("E1", n).coeff(n)
        elif g == 2:
            values["closed-form"] = unlabeled.unlabeled_gf("E2", n).coeff(n)
        if n <= shapes.MAX_LEAVES:
            values["oracle"] = shapes.gall_census(n).get(g, 0)
    else:
        values["recursion"] = labeled.count_labeled(n, g)
        values["gf"] = labeled.count_by_gf(n, g)
        values["direct"] = labeled.count_by_direct(n, g)
        if g == 0:
            values["closed-form"] = labeled.count_labeled_trees(n)
        elif g == 1 and n >= 3:
            values["closed-form"] = labeled.zhang_one_gall(n)
        elif g == 2:
            values["closed-form"] = egf_to_counts(labeled.labeled_gf("E2", n))[n]
        if n <= shapes.MAX_LEAVES:
            values["oracle"] = shapes.labeled_census(n).get(g, 0)
    return values


def _total_methods(kind, n):
    values = {}
    if kind == "unlabeled":
        values["recursion"] = unlabeled.unlabeled_total(n)
        values["gf"] = ogf_to_counts(unlabeled.unlabeled_gf("A", n))[n]
        if n <= shapes.MAX_LEAVES:
            values["oracle"] = len(shapes.generate_unlabeled(n))
    else:
        values["recursion"] = labeled.labeled_total(n)
        values["gf"] = egf_to_counts(labeled.labeled_gf("A", n))[n]
        if n <= shapes.MAX_LEAVES:
            values["oracle"] = sum(shapes.labeled_census(n).values())
    return values


def cmd_count(args) -> int:
    g = args.g
    if g == "all":
        values = _total_methods(args.kind, args.n)
    else:
        g = int(g)
        if g < 0:
            raise ValueError("gall count must be nonnegative")
        values = _cell_methods(args.kind, args.n, g)
    if args.method != "all":
        if args.method not in values:
            raise ValueError(
                "method %r is not applicable to kind=%s n=%s g=%s"
                % (args.method, args.kind, args.n, args.g)
            )
        values = {args.method: values[args.method]}
    distinct = set(values.values())
    if len(distinct) > 1:
        print("METHOD DISAGREEMENT for kind=%s n=%s g=%s" % (args.kind, args.n, args.g),
              file=sys.stderr)
        for method, value in sorted(values.items()):
            print("  %-12s %s" % (method, value), file=sys.stderr)
        return EXIT_MISMATCH
    value = next(iter(distinct))
    method = args.method if args.method != "all" else "all"
    if args.format == "json":
        record = {
            "n": args.n,
            "g": args.g if args.g == "all" else int(args.g),
            "value": _json_int(value),
            "method": method,
            "kind": args.kind,
        }
        print(json.dumps(record, sort_keys=True))
    else:
        print(value)
    return EXIT_OK


def _table_rows(kind, max_n, max_g):
    get = unlabeled.count_unlabeled if kind == "unlabeled" else labeled.count_labeled
    total = unlabeled.unlabeled_total if kind == "unlabeled" else labeled.labeled_total
    rows = []
    for n in range(1, max_n + 1):
        cells = [
            get(n, g) if g <= max_galls(n) else None for g in range(max_g + 1)
        ]
        rows.append((n, total(n), cells))
    return rows


def cmd_table(args) -> int:
    max_g = args.max_g if args.max_g is not None else max_galls(args.max_n)
    rows = _table_rows(args.kind, args.max_n, max_g)
    if args.format == "csv":
        for n, total, cells in rows:
            print(",".join(
                [str(n), str(total)] + ["" if c is None else str(c) for c in cells]
            ))
    elif args.format == "json":
        payload = [
            {
                "n": n,
                "total": _json_int(total),
                "cells": {str(g): _json_int(c) for g, c in enumerate(cells) if c is not None},
            }
            for n, total, cells in rows
        ]
        print(json.dumps(payload, sort_keys=True))
    else:  # aligned markdown
        header = ["n", "total"] + ["g=%d" % g for g in range(max_g + 1)]
        body = [
            [str(n), str(total)] + ["-" if c is None else str(c) for c in cells]
            for n, total, cells in rows
        ]
        widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
        def fmt(row):
            return "| " + " | ".join(v.rjust(w) for v, w in zip(row, widths)) + " |"
        print(fmt(header))
        print("|" + "|".join("-" * (w + 2) for w in widths) + "|")
        for row in body:
            print(fmt(row))
    return EXIT_OK


def cmd_series(args) -> int:
    name = args.cls
    order = args.order
    if name == "G":
        max_g = args.max_g if args.max_g is not None else max_galls(order)
        if args.kind == "unlabeled":
            bv = unlabeled.bivariate_unlabeled(order, max_g)
            for n in range(order + 1):
                for g in range(max_g + 1):
                    print("%d %d %s" % (n, g, bv.coeff(n, g)))
        else:
            bv = labeled.bivariate_labeled(order, max_g)
            slices = {g: egf_to_counts(bv.u_slice(g)) for g in range(max_g + 1)}
            for n in range(order + 1):
                for g in range(max_g + 1):
                    print("%d %d %s" % (n, g, slices[g][n]))
        return EXIT_OK
    if name.startswith("Eg:"):
        g = int(name.split(":", 1)[1])
        if args.kind == "unlabeled":
            series = unlabeled.eg_series_direct(g, order)
            counts = ogf_to_counts(series)
        else:
            series = labeled.eg_labeled_direct(g, order)
            counts = egf_to_counts(series)
    elif name in ("U", "E1", "E2", "A"):
        if args.kind == "unlabeled":
            counts = ogf_to_counts(unlabeled.unlabeled_gf(name, order))
        else:
            counts = egf_to_counts(labeled.labeled_gf(name, order))
    else:
        raise ValueError(
            "unknown series class %r (expected U, E1, E2, A, G or Eg:<g>)" % name
        )
    for value in counts:
        print(value)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify.run_verification(
        max_n=args.max_n, max_g=args.max_g, oracle_max_n=args.oracle_max_n
    )
    print(report.render(verbose=args.verbose))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_enumerate(args) -> int:
    generated = shapes.generate_unlabeled(args.n)
    for s in generated:
        if args.g is not None and s.n_galls != args.g:
            continue
        if args.annotate:
            print("%s\t%d\t%d" % (s.text, s.n_galls, s.aut))
        else:
            print(s.text)
    return EXIT_OK


def cmd_asym(args) -> int:
    digits = 15
    if args.kind == "unlabeled":
        params = (
            asymptotics.QUOTED_UNLABELED
            if args.constants == "quoted"
            else asymptotics.estimated_unlabeled_params(args.order)
        )
        value = asymptotics.asym_unlabeled(args.n, args.g, params)
        if args.g == 0:
            formula = "gamma/(2*sqrt(pi)) * n^(-3/2) * rho^(-n)"
        else:
            formula = "2^(2g-1)/((2g)!*gamma^(4g-1)*sqrt(pi)) * n^(2g-3/2) * rho^(-n)"
        print(mp.nstr(value, digits))
        print("formula: %s" % formula)
        print(
            "constants: gamma=%s rho=%s (%s)"
            % (params.gamma, params.rho, params.source)
        )
    else:
        value = asymptotics.asym_labeled(args.n, args.g)
        stirling = asymptotics.asym_labeled_stirling(args.n, args.g)
        print(mp.nstr(value, digits))
        print("formula: 2^(2g-1)/((2g)!*sqrt(pi)) * n^(2g-3/2) * 2^n * n!")
        print(
            "stirling form: 2^(2g-1)*sqrt(2)/(2g)! * (2/e)^n * n^(n+2g-1) = %s"
            % mp.nstr(stirling, digits)
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galleon",
        description="Exact enumeration of time-consistent galled trees "
        "by independent cross-checking methods.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count structures for one (n, g) cell or a row total")
    p.add_argument("--kind", choices=("unlabeled", "labeled"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", default="all", help="gall count, or 'all' for the row total")
    p.add_argument(
        "--method",
        choices=("recursion", "gf", "direct", "oracle", "closed-form", "all"),
        default="all",
        help="computation route; 'all' cross-checks every applicable one",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="emit the counts table")
    p.add_argument("--kind", choices=("unlabeled", "labeled"), required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-g", type=int, default=None)
    p.add_argument("--format", choices=("csv", "json", "md"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("series", help="print exact series coefficients")
    p.add_argument("--class", dest="cls", required=True,
                   help="U, E1, E2, A, G (bivariate) or Eg:<g>")
    p.add_argument("--kind", choices=("unlabeled", "labeled"), default="unlabeled")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--max-g", type=int, default=None, help="u-order for class G")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run the full cross-method verification")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--max-g", type=int, default=4)
    p.add_argument("--oracle-max-n", type=int, default=8,
                   help="exhaustive-generation bound (0 disables the oracle)")
    p.add_argument("--verbose", action="store_true", help="print every check line")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list canonical shapes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int, default=None, help="restrict to this gall count")
    p.add_argument("--annotate", action="store_true",
                   help="append gall count and automorphism size per line")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("asym", help="evaluate the asymptotic growth formulas")
    p.add_argument("--kind", choices=("unlabeled", "labeled"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--constants", choices=("quoted", "estimated"), default="quoted")
    p.add_argument("--order", type=int, default=200,
                   help="series order for constant re-estimation")
    p.set_defaults(func=cmd_asym)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except shapes.ResourceLimitError as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, NonIntegralCoefficientError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
