"""Command-line entry point: ``sixregular <subcommand> ...``.

Exit status: 0 on success, 1 when a verification fails or a scan finds a
counterexample, 2 on usage errors.  JSON output carries ``"schema": 1`` and
writes big integers as decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import bijections, cache, congruences, enumerator, inequalities, kernels, suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit_json(obj, out) -> None:
    json.dump(obj, out, indent=2, sort_keys=False)
    out.write("\n")


def _emit_csv(header, rows, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


# --- table ----------------------------------------------------------------

def cmd_table(args, out) -> int:
    if args.fn in ("mk", "pk") and args.k is None:
        raise UsageError(f"--fn {args.fn} needs --k")
    tab = None
    if args.from_cache and Path(args.from_cache).exists():
        tab = cache.read_table(args.from_cache)
        if tab.limit < args.limit:
            tab = None
    if tab is None:
        try:
            tab = kernels.table(args.fn, args.limit, args.method, args.k)
        except ValueError as e:
            raise UsageError(str(e)) from None
    values = tab.values[: args.limit + 1]
    if args.cache:
        cache.write_table(tab, args.cache)
    if args.format == "json":
        _emit_json({"schema": 1, "function": tab.name, "limit": args.limit, "method": tab.method,
                    "values": [str(v) for v in values]}, out)
    else:
        _emit_csv(("n", tab.name), enumerate(values), out)
    return EXIT_OK


# --- verify ---------------------------------------------------------------

def cmd_verify(args, out) -> int:
    if args.list:
        rows = suites.suite_catalog()
        if args.format == "json":
            _emit_json({"schema": 1, "suites": [dict(zip(("id", "description", "formula"), r)) for r in rows]}, out)
        else:
            _emit_csv(("id", "description", "formula"), rows, out)
        return EXIT_OK
    if args.residuals:
        if args.suite == "all":
            raise UsageError("--residuals needs a single --suite")
        k = args.k[0] if args.k else None
        rows = suites.residual_rows(args.suite, args.limit, k)
        enc = lambda v: " ".join(map(str, v)) if isinstance(v, tuple) else v
        _emit_csv(("n", "expected", "got"), [(n, enc(e), enc(g)) for n, e, g in rows], out)
        return EXIT_OK if all(e == g for _, e, g in rows) else EXIT_FAIL
    ids = list(suites.SUITES) if args.suite == "all" else [args.suite]
    T = suites.TableSet(args.limit)
    reports = []
    for sid in ids:
        params = {"k": args.k} if args.k and suites.SUITES[sid].parametrised else None
        reports.append(suites.run_suite(sid, args.limit, params, tables=T, collect_all=args.collect_all))
    if args.format == "json":
        _emit_json({"schema": 1, "reports": [r.as_dict() for r in reports]}, out)
    else:
        rows = []
        for r in reports:
            ff = r.first_failure
            k = ",".join(map(str, r.params.get("k", ())))
            rows.append((r.suite, k, r.status, "" if ff is None else ff[0], r.checked, f"{r.elapsed:.3f}"))
        _emit_csv(("suite", "k", "status", "first_failure_n", "checked", "elapsed_s"), rows, out)
    return EXIT_OK if all(r.status == "pass" for r in reports) else EXIT_FAIL


# --- scan -----------------------------------------------------------------

def cmd_scan(args, out) -> int:
    if args.id == "all":
        ids = list(inequalities.CONJECTURES)
    elif args.id == "conjectures":
        ids = list(inequalities.CONJECTURE_IDS)
    else:
        ids = [args.id]
    T = suites.TableSet(args.limit)
    if args.k is not None:
        results = []
        for cid in ids:
            c = inequalities.CONJECTURES[cid]
            for b in ([args.branch] if args.branch else c.branches):
                results.append(inequalities.scan(cid, args.k, args.limit, b, T))
    else:
        results = inequalities.scan_matrix(ids, args.k_max, args.limit, T)
    problems = inequalities.consistency_check(args.k_max if args.k is None else args.k, args.limit, T) \
        if args.check_implications else []
    if args.format == "json":
        _emit_json({"schema": 1, "results": [r.as_dict() for r in results], "consistency_problems": problems}, out)
    else:
        _emit_csv(inequalities.CSV_HEADER, inequalities.csv_rows(results), out)
        for p in problems:
            print(f"consistency: {p}", file=sys.stderr)
    code = inequalities.exit_code(results)
    return EXIT_FAIL if problems else code


# --- congruence -----------------------------------------------------------

def cmd_congruence(args, out) -> int:
    if args.two_squares:
        b6 = kernels.b6_table(args.limit)
        res = congruences.two_squares_agreement(args.limit, b6.values)
        if args.format == "json":
            _emit_json({"schema": 1, "theorem": "two-squares-route", **res}, out)
        else:
            _emit_csv(("limit", "status", "mismatches"), [(res["limit"], res["status"], len(res["mismatches"]))], out)
        return EXIT_OK if res["status"] == "pass" else EXIT_FAIL
    reports = []
    if args.corollary is not None:
        reports.append(congruences.verify_corollary_p24(args.corollary, args.limit))
    elif args.primes:
        last = args.primes[-1]
        js = args.j if args.j else [j for j in range(last) if j % last]
        for j in js:
            spec = congruences.PrimeFamilySpec(tuple(args.primes), j, args.target, args.exploratory)
            reports.append(congruences.verify_family(spec, args.limit))
    else:
        raise UsageError("give --primes, --corollary or --two-squares")
    if args.format == "json":
        _emit_json({"schema": 1, "reports": [r.as_dict() for r in reports]}, out)
    else:
        rows = [(r.theorem, json.dumps(r.spec, sort_keys=True), r.table_limit, r.checked, len(r.violations), r.status)
                for r in reports]
        _emit_csv(("theorem", "spec", "table_limit", "checked", "violations", "status"), rows, out)
    return EXIT_FAIL if any(r.status == "fail" for r in reports) else EXIT_OK


# --- bijection ------------------------------------------------------------

def _fmt(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def cmd_bijection(args, out) -> int:
    if args.map == "census":
        rep = bijections.three_split_involution_census(args.n)
        if args.format == "json":
            _emit_json({"schema": 1, **rep.as_dict()}, out)
        else:
            _emit_csv(("check", "ok"), [("signed_count", rep.signed_count), ("expected", rep.expected),
                                          *rep.checks.items(), ("status", rep.status)], out)
        return EXIT_OK if rep.status == "pass" else EXIT_FAIL
    rows = bijections.orbit_table(args.map, args.n)
    if args.format == "json":
        _emit_json({"schema": 1, "map": args.map, "n": args.n,
                    "pairs": [[list(a), list(b)] for a, b in rows]}, out)
    else:
        _emit_csv(("input", "image"), [(_fmt(a), _fmt(b)) for a, b in rows], out)
    return EXIT_OK


# --- oracle ---------------------------------------------------------------

def cmd_oracle(args, out) -> int:
    if args.constraint in ("mk", "pk"):
        if args.k is None:
            raise UsageError(f"--constraint {args.constraint} needs --k")
        parts = (enumerator.list_mk if args.constraint == "mk" else enumerator.list_pk)(args.k, args.n)
        name = f"{args.constraint}({args.k})"
    else:
        try:
            c = enumerator.named_constraint(args.constraint)
        except ValueError as e:
            raise UsageError(str(e)) from None
        parts = enumerator.enumerate_partitions(args.n, c)
        name = args.constraint
    if args.format == "json":
        obj = {"schema": 1, "constraint": name, "n": args.n, "count": str(len(parts))}
        if args.list:
            obj["partitions"] = [list(x) for x in parts]
        _emit_json(obj, out)
    elif args.list:
        _emit_csv(("partition",), [(_fmt(x),) for x in parts], out)
    else:
        _emit_csv(("constraint", "n", "count"), [(name, args.n, len(parts))], out)
    return EXIT_OK


# --- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sixregular", description="Exact tables, identity checks and scans for 6-regular partitions.")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("table", help="emit f(0..N)", description="CSV columns: n, <function id>.")
    p.add_argument("--fn", required=True, choices=kernels.FUNCTIONS)
    p.add_argument("--limit", type=_nonneg, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--method")
    p.add_argument("--cache", help="also write the binary cache here")
    p.add_argument("--from-cache", help="read this cache if present and large enough")
    fmt(p)
    p.set_defaults(run=cmd_table)

    p = sub.add_parser("verify", help="run identity suites",
                       description="CSV columns: suite, k, status, first_failure_n, checked, elapsed_s. "
                                   "With --residuals: n, expected, got.")
    p.add_argument("--suite", default="all", choices=("all", *suites.SUITES))
    p.add_argument("--limit", type=_nonneg, default=500)
    p.add_argument("--k", type=_int_list, help="k values for th5/th5a, e.g. 1,2,3")
    p.add_argument("--collect-all", action="store_true")
    p.add_argument("--residuals", action="store_true")
    p.add_argument("--list", action="store_true", help="print the suite catalog and exit")
    fmt(p)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("scan", help="inequality and conjecture scans",
                       description="CSV columns: " + ", ".join(inequalities.CSV_HEADER) + ".")
    p.add_argument("--id", default="all", choices=("all", "conjectures", *inequalities.CONJECTURES))
    p.add_argument("--k", type=_nonneg, help="a single k (default: sweep up to --k-max)")
    p.add_argument("--k-max", type=_nonneg, default=10)
    p.add_argument("--branch", choices=("i", "ii"))
    p.add_argument("--limit", type=_nonneg, default=2000)
    p.add_argument("--check-implications", action="store_true")
    fmt(p)
    p.set_defaults(run=cmd_scan)

    p = sub.add_parser("congruence", help="mod-3 progression checks",
                       description="CSV columns: theorem, spec, table_limit, checked, violations, status.")
    p.add_argument("--primes", type=_int_list, help="p_1,...,p_{a+1}")
    p.add_argument("--j", type=_int_list, help="shifts (default: every j not divisible by the last prime)")
    p.add_argument("--target", choices=("b6", "b3"), default="b6")
    p.add_argument("--exploratory", action="store_true")
    p.add_argument("--corollary", type=int, metavar="P")
    p.add_argument("--two-squares", action="store_true")
    p.add_argument("--limit", type=_nonneg, default=100000)
    fmt(p)
    p.set_defaults(run=cmd_congruence)

    p = sub.add_parser("bijection", help="dump a map's pairs at weight n, or run the pair/triple census",
                       description="CSV columns: input, image (or check, ok for census).")
    p.add_argument("--map", required=True, choices=("glaisher", "franklin", "phi", "psi", "census"))
    p.add_argument("--n", type=_nonneg, required=True)
    fmt(p)
    p.set_defaults(run=cmd_bijection)

    p = sub.add_parser("oracle", help="brute-force counts and listings",
                       description="CSV columns: constraint, n, count (or partition with --list).")
    p.add_argument("--constraint", required=True, choices=(*sorted(enumerator.NAMED), "mk", "pk"))
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--list", action="store_true")
    fmt(p)
    p.set_defaults(run=cmd_oracle)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.run(args, out)
    except UsageError as e:
        print(f"sixregular: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except cache.CacheFormatError as e:
        print(f"sixregular: cache error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, IndexError) as e:
        print(f"sixregular: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
