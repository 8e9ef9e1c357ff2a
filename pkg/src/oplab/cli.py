"""Command-line driver: ``oplab verify | scan | expand | moments | strings | string-table | table``."""

import argparse
import csv
import json
import os
import sys

from . import bivariate, series
from .combinatorics import build_tables, gen_overpartitions
from .moments import (
    KINDS,
    crank_moment_closed_form,
    ospt_bar_series,
    overpartition_prefactor,
    positive_moment_from_table,
    rank_moment_closed_form,
)
from .strings import odd_even_string_series, count_even_strings_over, count_odd_strings_over
from .verify import CONJECTURE_SCANS, PROVEN_CHECKS, reproduce_string_table

ENV_ORDER = "OPLAB_DEFAULT_ORDER"


def _env_order():
    raw = os.environ.get(ENV_ORDER)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"{ENV_ORDER} must be an integer, got {raw!r}")
    if value < 0:
        raise SystemExit(f"{ENV_ORDER} must be non-negative")
    return value


def _univariate(order, k):
    a = series.a_family
    return {
        "euler": lambda: series.euler_product(order),
        "neg-q": lambda: series.neg_q_product(order),
        "odd-minus": lambda: series.odd_product(order, -1),
        "odd-plus": lambda: series.odd_product(order, +1),
        "partitions": lambda: series.invert(series.euler_product(order)),
        "overpartitions": lambda: overpartition_prefactor(order),
        "h": lambda: series.lambert_h(order),
        "h-closed": lambda: series.lambert_h_closed(order),
        "h-diff": lambda: series.h_diff_closed(order),
        "f": lambda: series.f_k_series(k, order),
        "A1": lambda: a(order)[0],
        "A2": lambda: a(order)[1],
        "A3": lambda: a(order)[2],
        "A4": lambda: a(order)[3],
        "rank-moment": lambda: rank_moment_closed_form(order),
        "crank-moment": lambda: crank_moment_closed_form(order),
        "ospt-bar": lambda: ospt_bar_series(order),
        "odd-strings": lambda: odd_even_string_series(k, order)[0],
        "even-strings": lambda: odd_even_string_series(k, order)[1],
    }


BIVARIATE = {
    "rank-over": bivariate.rank_gf_over,
    "crank": bivariate.crank_gf_partitions,
    "crank-over": bivariate.crank_gf_over,
}
UNIVARIATE_NAMES = tuple(_univariate(0, 1))


def _print_reports(reports, fmt, out):
    if fmt == "json":
        for r in reports:
            out.write(json.dumps(r.to_json()) + "\n")
        return
    width = max(len(r.check_id) for r in reports)
    for r in reports:
        line = f"{r.check_id:<{width}}  {r.status:<26}  {r.range:<32}  {r.elapsed:8.2f}s"
        if r.first_violation is not None:
            line += f"  first violation at n={r.first_violation[0]}: {r.first_violation[1]}"
        out.write(line + "\n")


def _cmd_verify(args, out):
    ids = list(PROVEN_CHECKS) if args.check == "all" else [args.check]
    env = _env_order()
    reports = []
    for cid in ids:
        fn, size_arg, _default = PROVEN_CHECKS[cid]
        kwargs = {}
        if size_arg == "order":
            value = args.order if args.order is not None else env
            if value is not None:
                kwargs["order"] = value
        elif size_arg == "n_max":
            if args.n_max is not None:
                kwargs["n_max"] = args.n_max
        reports.append(fn(**kwargs))
    _print_reports(reports, args.format, out)
    return 1 if any(r.failed for r in reports) else 0


def _cmd_scan(args, out):
    ids = list(CONJECTURE_SCANS) if args.conjecture == "all" else [args.conjecture]
    reports = []
    for cid in ids:
        kwargs = {}
        if cid == "h-multiple":
            if args.m_max is not None:
                kwargs["m_max"] = args.m_max
            order = args.n_max if args.n_max is not None else args.order
            if order is not None:
                kwargs["order"] = order
        else:
            if args.k_max is not None:
                kwargs["k_max"] = args.k_max
            if args.n_max is not None:
                kwargs["n_max"] = args.n_max
        reports.append(CONJECTURE_SCANS[cid](**kwargs))
    _print_reports(reports, args.format, out)
    return 1 if any(r.failed for r in reports) else 0


def _cmd_expand(args, out):
    order = args.order if args.order is not None else _env_order()
    if order is None:
        order = 20
    if args.bivariate and args.name not in BIVARIATE:
        raise SystemExit(f"--bivariate needs one of {', '.join(BIVARIATE)}")
    if args.name in BIVARIATE:
        g = BIVARIATE[args.name](order)
        if args.format == "json":
            for row in g.to_json():
                out.write(json.dumps(row) + "\n")
        else:
            for n, row in enumerate(g.rows):
                terms = " ".join(f"{c}*z^{m}" for m, c in sorted(row.items()))
                out.write(f"q^{n}: {terms}\n")
        return 0
    s = _univariate(order, args.k)[args.name]()
    if args.format == "json":
        out.write(json.dumps(s.to_json()) + "\n")
    else:
        out.write(repr(s) + "\n")
    return 0


def _cmd_moments(args, out):
    tables = {t.statistic: t for t in build_tables(args.n_max, method=args.method)}
    ms = positive_moment_from_table(tables[args.kind], args.k)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "value"])
    for n in range(args.n_max + 1):
        w.writerow([n, ms[n]])
    return 0


def _cmd_strings(args, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["overpartition", "odd", "even"])
    odd = even = 0
    for o in gen_overpartitions(args.n):
        a, b = count_odd_strings_over(o), count_even_strings_over(o)
        odd += a
        even += b
        if a or b or args.all:
            w.writerow([str(o), a, b])
    w.writerow(["total", odd, even])
    return 0


def _cmd_string_table(args, out):
    r = reproduce_string_table()
    if args.format == "json":
        out.write(json.dumps(r.to_json()) + "\n")
    else:
        for text, a, b in r.details["rows"]:
            if a or b:
                out.write(f"{text:<12} {a} {b}\n")
        out.write(f"{'total':<12} {r.details['totals'][0]} {r.details['totals'][1]}\n")
        _print_reports([r], "text", out)
    return 1 if r.failed else 0


def _cmd_table(args, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["statistic", "m", "n", "count"])
    for t in build_tables(args.n_max, method=args.method):
        for (m, n), c in t.items():
            w.writerow([t.statistic, m, n, c])
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="oplab", description="Exact rank/crank moment checks for overpartitions.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a proven identity or positivity check")
    v.add_argument("check", choices=[*PROVEN_CHECKS, "all"])
    v.add_argument("--order", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("scan", help="scan a conjecture over a finite range")
    s.add_argument("conjecture", choices=[*CONJECTURE_SCANS, "all"])
    s.add_argument("--k-max", type=int)
    s.add_argument("--m-max", type=int)
    s.add_argument("--n-max", type=int)
    s.add_argument("--order", type=int, help="alias of --n-max for h-multiple")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=_cmd_scan)

    e = sub.add_parser("expand", help="print a truncated series")
    e.add_argument("name", choices=[*UNIVARIATE_NAMES, *BIVARIATE])
    e.add_argument("--order", type=int)
    e.add_argument("--k", type=int, default=1, help="index for f, odd-strings, even-strings")
    e.add_argument("--bivariate", action="store_true", help="two-variable series: one JSON row per q-power")
    e.add_argument("--format", choices=["text", "json"], default="json")
    e.set_defaults(func=_cmd_expand)

    m = sub.add_parser("moments", help="positive moments from enumeration, as CSV n,value")
    m.add_argument("--kind", choices=KINDS, default=KINDS[0])
    m.add_argument("--k", type=int, default=1)
    m.add_argument("--n-max", type=int, default=20)
    m.add_argument("--method", choices=["exhaustive", "grouped"], default="grouped")
    m.set_defaults(func=_cmd_moments)

    st = sub.add_parser("strings", help="string counts for every overpartition of n")
    st.add_argument("--n", type=int, required=True)
    st.add_argument("--all", action="store_true", help="also list overpartitions without strings")
    st.set_defaults(func=_cmd_strings)

    t1 = sub.add_parser("string-table", help="string counts for the overpartitions of 5")
    t1.add_argument("--format", choices=["text", "json"], default="text")
    t1.set_defaults(func=_cmd_string_table)

    tb = sub.add_parser("table", help="count tables as CSV statistic,m,n,count")
    tb.add_argument("--n-max", type=int, default=10)
    tb.add_argument("--method", choices=["exhaustive", "grouped"], default="exhaustive")
    tb.set_defaults(func=_cmd_table)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    for name in ("order", "n_max", "n", "k", "k_max", "m_max"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            raise SystemExit(f"--{name.replace('_', '-')} must be non-negative")
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())
