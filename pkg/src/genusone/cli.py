"""Command-line front end.

Exit codes: 0 success, 1 bad input object, 2 usage error, 3 failed
verification.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import count as _count
from . import oracle as _oracle
from . import series as _series
from .errors import GenusOneError
from .fourcolor import find_separating, induced_representation, separating_points_of, separating_to_coloring
from .perm import Permutation, back_points, classify_genus1, genus, num_cycles, parse_permutation
from .reduce import canonical_separating, is_reduced, reduce_fully
from .setpart import enumerate_set_partitions, genus_of_partition

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3

__all__ = ["build_parser", "main", "run"]


def _perm(args) -> Permutation:
    return parse_permutation(args.perm, args.n)


def _show(alpha: Permutation) -> str:
    return str(alpha) if alpha.n else "empty"


def cmd_genus(args, out) -> int:
    alpha = _perm(args)
    g = genus(alpha)
    kind = classify_genus1(alpha).value if g == 1 else "-"
    print(f"genus={g} cycles={num_cycles(alpha)} backpoints={len(back_points(alpha))} type={kind}", file=out)
    return EXIT_OK


def _print_representation(alpha, sp, out) -> None:
    rep = induced_representation(alpha, sp)
    print(f"separating={sp}", file=out)
    print(f"coloring={separating_to_coloring(sp)}", file=out)
    print(f"partition={rep.partition}", file=out)


def cmd_represent(args, out) -> int:
    alpha = _perm(args)
    if args.all:
        for sp in separating_points_of(alpha):
            _print_representation(alpha, sp, out)
        return EXIT_OK
    if is_reduced(alpha):
        sp = canonical_separating(alpha)
        source = "canonical"
    else:
        sp = find_separating(alpha)
        source = "lexicographic"
    _print_representation(alpha, sp, out)
    print(f"source={source}", file=out)
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    trace = reduce_fully(_perm(args))
    if args.trace:
        for step in trace.steps:
            print(f"removed={step.original}", file=out)
    print(f"reduced={_show(trace.result)}", file=out)
    return EXIT_OK


_SERIES_BY_SLICE = {
    (True, 0): "R0", (True, 1): "R1", (True, 2): "R2", (True, "any"): "Rstar",
    (False, 0): "P0", (False, 1): "P1", (False, 2): "P2", (False, "any"): "Pstar",
}


def _parse_backpoints(text: str):
    return "any" if text == "any" else int(text)


def cmd_count(args, out) -> int:
    bp = 0 if args.kind == "partition" else args.backpoints
    if args.provenance == "formula":
        table = _count.formula_table(args.kind, args.n_max, args.reduced, bp)
    elif args.provenance == "bruteforce":
        table = _oracle.brute_table(args.kind, args.n_max, reduced=args.reduced, backpoints=bp, jobs=args.jobs)
    else:
        s = _series.expand_named(_SERIES_BY_SLICE[args.reduced, bp], args.n_max)
        table = _count.CountTable(args.kind, args.reduced, bp, "series",
                                  {(n, k): c for n, k, c in s.items()})
    rows = [r for r in table.rows() if args.k is None or r[1] == args.k]
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "k", "count"])
        w.writerows(rows)
    elif args.format == "json":
        doc = {
            "schema_version": 1,
            "kind": table.kind,
            "reduced": table.reduced,
            "backpoints": table.backpoints,
            "provenance": table.provenance,
            "entries": [{"n": n, "k": k, "count": c} for n, k, c in rows],
        }
        print(json.dumps(doc, indent=2), file=out)
    else:
        for n, k, c in rows:
            print(f"n={n} k={k} count={c}", file=out)
    return EXIT_OK


def cmd_series(args, out) -> int:
    s = _series.expand_named(args.name, args.trunc)
    if not s.is_integral():
        raise GenusOneError(f"{args.name} has non-integer coefficients up to x^{args.trunc}")
    rows = list(s.items())
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "k", "coefficient"])
        w.writerows(rows)
    else:
        doc = {
            "schema_version": 1,
            "name": args.name,
            "trunc": args.trunc,
            "coefficients": [{"n": n, "k": k, "coefficient": c} for n, k, c in rows],
        }
        print(json.dumps(doc, indent=2), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    report = _oracle.verify_suite(args.n_max, jobs=args.jobs)
    if args.json:
        print(json.dumps(report, indent=2), file=out)
    else:
        for chk in report["checks"]:
            line = f"{'PASS' if chk['passed'] else 'FAIL'} {chk['name']}"
            if not chk["passed"]:
                line += f": {chk['witness']}"
            print(line, file=out)
    return EXIT_OK if report["passed"] else EXIT_VERIFY


def cmd_enumerate(args, out) -> int:
    if args.kind == "permutation":
        for alpha in _oracle.enumerate_permutations(args.n):
            if args.cycles is not None and num_cycles(alpha) != args.cycles:
                continue
            if args.genus is not None and genus(alpha) != args.genus:
                continue
            print(_show(alpha), file=out)
    else:
        if args.n > _oracle.PARTITION_LIMIT:
            raise GenusOneError(f"partition enumeration limited to n <= {_oracle.PARTITION_LIMIT}")
        for p in enumerate_set_partitions(args.n):
            if args.cycles is not None and len(p) != args.cycles:
                continue
            if args.genus is not None and genus_of_partition(p) != args.genus:
                continue
            print(str(p) if p.n else "empty", file=out)
    return EXIT_OK


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genusone", description="Genus one partitions and permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_perm(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("perm", help='cycle notation such as "(1,3)(2,4)" or one-line "[3,4,1,2]"')
        p.add_argument("--n", type=_nonneg, help="number of points (default: largest point mentioned)")
        return p

    p = with_perm("genus", "genus, cycle count, back points and genus one type")
    p.set_defaults(func=cmd_genus)

    p = with_perm("represent", "four-colored noncrossing partition of a genus one permutation")
    p.add_argument("--all", action="store_true", help="list the representation for every separating quadruple")
    p.set_defaults(func=cmd_represent)

    p = with_perm("reduce", "strip trivial cycles down to the reduced form")
    p.add_argument("--trace", action="store_true", help="list removed cycles in the input's labels")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("count", help="genus one counts by size and number of cycles")
    p.add_argument("--kind", choices=("partition", "permutation"), required=True)
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--backpoints", choices=("0", "1", "2", "any"), default="any")
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--format", choices=("csv", "json", "plain"), default="csv")
    p.add_argument("--provenance", choices=("formula", "bruteforce", "series"), default="formula")
    p.add_argument("--jobs", type=_nonneg, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", help="coefficients of a generating function")
    p.add_argument("--name", choices=_series.NAMES, required=True)
    p.add_argument("--trunc", type=_nonneg, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="exhaustive check of every invariant")
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=_nonneg, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list permutations or set partitions")
    p.add_argument("--kind", choices=("partition", "permutation"), required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--genus", type=_nonneg)
    p.add_argument("--cycles", type=_nonneg, help="number of cycles (blocks for partitions)")
    p.set_defaults(func=cmd_enumerate)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "backpoints", None) is not None:
        args.backpoints = _parse_backpoints(args.backpoints)
    try:
        return args.func(args, out)
    except GenusOneError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN


def run_captured(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run the CLI and return ``(exit code, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    old_err = sys.stderr
    sys.stderr = err  # argparse writes usage errors here
    try:
        code = run(argv, out, err)
    finally:
        sys.stderr = old_err
    return code, out.getvalue(), err.getvalue()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
