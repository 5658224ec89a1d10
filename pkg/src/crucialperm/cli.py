"""Command-line interface: ``crucialperm <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .crucial import TYPES, classify_direct, classify_rsk, minimal_length, minimal_quadrocrucial, minimal_top_right
from .enumeration import brute_cap, count_brute, count_formula, count_syt, list_brute, list_syt
from .errors import BruteForceCapError, InvalidInputError, UnsupportedError
from .perm import PatternSpec, format_permutation, parse_permutation
from .tableaux import format_pair, format_shape, rsk
from .verify import SUITES, run_suite

EXIT_INVALID = 2
EXIT_UNSUPPORTED = 3
EXIT_CAP = 4

CONSTRUCTIONS = {"top_right": minimal_top_right, "quadro": minimal_quadrocrucial}


def default_jobs() -> int:
    value = os.environ.get("CRUCIAL_JOBS")
    if value:
        return max(1, int(value))
    return os.cpu_count() or 1


def _spec(args) -> PatternSpec:
    if args.k is None or args.l is None:
        raise InvalidInputError("both --k and --l are required")
    return PatternSpec(args.k, args.l)


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise InvalidInputError("missing required option(s): " + ", ".join(missing))


def _method(args) -> str:
    if args.method:
        return args.method
    return "syt" if args.n > brute_cap() else "brute"


def _csv_out(rows):
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerows(rows)


def cmd_classify(args):
    spec = _spec(args)
    p = parse_permutation(args.perm)
    cls = classify_rsk(p, spec) if args.via == "rsk" else classify_direct(p, spec)
    d = cls.to_dict()
    if args.format == "json":
        print(json.dumps(d))
    elif args.format == "csv":
        _csv_out([list(d), [str(v).lower() for v in d.values()]])
    else:
        for key, value in d.items():
            print(f"{key}: {str(value).lower()}")


def cmd_rsk(args):
    p = parse_permutation(args.perm)
    pair = rsk(p)
    if args.format == "json":
        print(json.dumps({"P": [list(r) for r in pair.P.rows], "Q": [list(r) for r in pair.Q.rows],
                          "shape": format_shape(pair.P.shape)}))
    elif args.format == "csv":
        rows = [["tableau", "row", "entries"]]
        for name, t in (("P", pair.P), ("Q", pair.Q)):
            rows += [[name, i, " ".join(map(str, r))] for i, r in enumerate(t.rows, 1)]
        _csv_out(rows)
    else:
        print(format_pair(pair))


def cmd_count(args):
    _need(args, "n", "type")
    spec = _spec(args)
    method = _method(args)
    if method == "brute":
        rep = count_brute(args.n, spec, args.type, jobs=args.jobs)
    elif method == "syt":
        rep = count_syt(args.n, spec, args.type, jobs=args.jobs)
    else:
        rep = count_formula(args.n, spec, args.type)
    if args.format == "json":
        print(rep.to_json())
    elif args.format == "csv":
        _csv_out([["n", "k", "l", "type", "method", "count"],
                  [rep.n, rep.k, rep.l, rep.type, rep.method, rep.count]])
    else:
        print(rep.count)


def _emit_perms(perms, fmt):
    for p in perms:
        if fmt == "json":
            print(json.dumps(list(p)))
        elif fmt == "csv":
            print(",".join(map(str, p)))
        else:
            print(format_permutation(p))


def cmd_list(args):
    _need(args, "n", "type")
    spec = _spec(args)
    method = _method(args)
    if method == "formula":
        raise UnsupportedError("listing needs method brute or syt")
    if method == "brute":
        perms = list_brute(args.n, spec, args.type, jobs=args.jobs)
    else:
        perms = list_syt(args.n, spec, args.type)
    _emit_perms(perms, args.format)


def cmd_minimal(args):
    _need(args, "type")
    spec = _spec(args)
    n = minimal_length(spec, args.type)
    if args.type in CONSTRUCTIONS:
        perms = [CONSTRUCTIONS[args.type](spec)]
        source = "construction"
    else:
        perms = list(list_syt(n, spec, args.type))
        source = "enumeration"
    if args.format == "json":
        print(json.dumps({"k": spec.k, "l": spec.l, "type": args.type, "n": n, "source": source,
                          "permutations": [list(p) for p in perms]}))
    else:
        _emit_perms(perms, args.format)


def _table(args):
    spec = _spec(args)
    nmax = spec.max_length if args.nmax is None else args.nmax
    method = args.method or "syt"
    reports = []
    for n in range(1, nmax + 1):
        for t in TYPES:
            if method == "brute":
                reports.append(count_brute(n, spec, t, jobs=args.jobs))
            elif method == "syt":
                reports.append(count_syt(n, spec, t, jobs=args.jobs))
            else:
                reports.append(count_formula(n, spec, t))
    return spec, nmax, reports


def cmd_table(args):
    spec, nmax, reports = _table(args)
    by_n = {}
    for r in reports:
        by_n.setdefault(r.n, {})[r.type] = r.count
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports]))
    elif args.format == "csv":
        _csv_out([["n", *TYPES]] + [[n, *(row[t] for t in TYPES)] for n, row in by_n.items()])
    else:
        widths = [max(len(t), *(len(str(row[t])) for row in by_n.values())) for t in TYPES]
        print("  n  " + "  ".join(t.rjust(w) for t, w in zip(TYPES, widths)))
        for n, row in by_n.items():
            print(f"{n:>3}  " + "  ".join(str(row[t]).rjust(w) for t, w in zip(TYPES, widths)))
    if args.plot:
        from .plotting import plot_count_table

        series = {t: [(n, row[t]) for n, row in by_n.items()] for t in TYPES}
        plot_count_table(series, spec.k, spec.l, args.plot)
        print(f"wrote {args.plot}", file=sys.stderr)


def cmd_verify(args):
    spec = None
    if args.k is not None or args.l is not None:
        spec = _spec(args)
    checks = run_suite(args.suite, spec, args.nmax)
    failed = 0
    for c in checks:
        failed += not c.ok
        if args.format == "json":
            print(json.dumps({"name": c.name, "ok": c.ok, "detail": c.detail}))
        elif args.format == "csv":
            _csv_out([[c.name, "pass" if c.ok else "fail", c.detail]])
        else:
            print(c.line())
    summary = f"suite {args.suite}: {len(checks) - failed}/{len(checks)} checks passed"
    print(summary, file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crucialperm", description="Crucial permutations for monotone patterns.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec=True):
        if spec:
            p.add_argument("--k", type=int, help="forbidden increasing length")
            p.add_argument("--l", type=int, help="forbidden decreasing length")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes (env CRUCIAL_JOBS)")

    p = sub.add_parser("classify", help="classify a permutation")
    p.add_argument("perm")
    p.add_argument("--via", choices=("direct", "rsk"), default="direct")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("rsk", help="print the RSK pair (P, Q)")
    p.add_argument("perm")
    common(p, spec=False)
    p.set_defaults(func=cmd_rsk)

    for name, func, methods in (("count", cmd_count, ("brute", "syt", "formula")), ("list", cmd_list, ("brute", "syt"))):
        p = sub.add_parser(name, help=f"{name} permutations of one type")
        p.add_argument("--n", type=int)
        p.add_argument("--type", choices=TYPES)
        p.add_argument("--method", choices=methods)
        common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("minimal", help="shortest permutations of a type")
    p.add_argument("--type", choices=TYPES)
    common(p)
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("table", help="counts for every type and n")
    p.add_argument("--nmax", type=int)
    p.add_argument("--method", choices=("brute", "syt", "formula"))
    p.add_argument("--plot", metavar="PATH", help="also write a figure of the counts")
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--nmax", type=int)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        args.jobs = 1
    try:
        return args.func(args) or 0
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except UnsupportedError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except BruteForceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
