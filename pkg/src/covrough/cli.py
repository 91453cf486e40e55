"""Command-line interface.

Exit codes:
  0  success
  1  an identity check failed (verify)
  2  parse or validation error in the inputs
  3  route not available for the requested operator
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence

from .boolmat import format_vector
from .covering import Covering, format_set
from .errors import CovroughError, RouteSchemeMismatch
from .generate import random_covering, random_covering_text
from .matrix_route import EXHAUSTIVE_LIMIT, IdentityReport, characteristic_matrices, verify_identities
from .routes import LEGACY_WARNING, Route, compute
from .tables import render_table
from .textio import format_covering, parse_set, read_covering, read_sets
from .oracle import Scheme

EXIT_OK = 0
EXIT_IDENTITY_FAILED = 1
EXIT_INPUT = 2
EXIT_ROUTE = 3

SCHEMES = ["second", "fifth", "sixth", "sixth-dual"]


def _dump_matrices(cov: Covering, out) -> None:
    cm = characteristic_matrices(cov)
    for label, mat in (("M", cm.membership), ("Gamma", cm.gamma), ("Pi", cm.pi)):
        print(f"# {label} ({mat.nrows}x{mat.ncols})", file=out)
        print(mat.dump(), file=out)


def _warn_legacy(route: str) -> None:
    if route == Route.LEGACY.value:
        print(LEGACY_WARNING, file=sys.stderr)


def cmd_compute(args) -> int:
    cov = read_covering(args.covering)
    x = parse_set(args.set, cov.universe)
    if args.dump_matrices:
        _dump_matrices(cov, sys.stdout)
    res = compute(cov, x, Scheme.parse(args.scheme), args.bound, args.route)
    _warn_legacy(args.route)
    print(format_set(res.result))
    if res.route is not Route.ORACLE:
        print(format_vector(res.vector))
    return EXIT_OK


def cmd_table(args) -> int:
    cov = read_covering(args.covering)
    with open(args.sets, encoding="utf-8") as fh:
        sets = read_sets(fh.read(), cov.universe)
    if args.dump_matrices:
        _dump_matrices(cov, sys.stdout)
    text = render_table(cov, sets, Scheme.parse(args.scheme), args.bound, args.route)
    _warn_legacy(args.route)
    sys.stdout.write(text)
    return EXIT_OK


def _print_failure(report: IdentityReport) -> None:
    cov = report.covering
    for r in report.failures():
        where = f"X = {format_set(r.counterexample)}" if r.counterexample is not None else r.detail
        print(f"COUNTEREXAMPLE {r.name}: {where}")
        print("  covering:")
        for line in format_covering(cov).splitlines():
            print("    " + line)


def _verify_file(args) -> int:
    cov = read_covering(args.covering)
    if args.dump_matrices:
        _dump_matrices(cov, sys.stdout)
    report = verify_identities(cov, exhaustive=args.exhaustive, samples=args.samples, seed=args.seed)
    mode = "exhaustive" if args.exhaustive else "sampled"
    print(f"covering: {cov.n} elements, {cov.m} blocks; {report.subsets_checked} subsets ({mode})")
    for r in report.results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<28} checks={r.checked:<6} {r.description}")
    ws = report.legacy_witnesses
    print(f"legacy/corrected witnesses: {len(ws)}")
    cm = characteristic_matrices(cov)
    for x in ws[: args.witnesses]:
        corrected = compute(cov, x, "sixth", "lower", Route.MATRIX, cm=cm).result
        legacy = compute(cov, x, "sixth", "lower", Route.LEGACY, cm=cm).result
        print(f"  X = {format_set(x)}: corrected {format_set(corrected)}, legacy {format_set(legacy)}")
    if len(ws) > args.witnesses:
        print(f"  ... and {len(ws) - args.witnesses} more")
    if not report.passed:
        _print_failure(report)
        return EXIT_IDENTITY_FAILED
    return EXIT_OK


def _verify_random(args) -> int:
    max_n, max_m, trials = args.random
    if max_n < 1 or max_m < 1 or trials < 0:
        raise CovroughError("--random needs N >= 1, M >= 1 and TRIALS >= 0")
    if args.exhaustive and max_n > EXHAUSTIVE_LIMIT:
        raise CovroughError(f"--exhaustive supports at most {EXHAUSTIVE_LIMIT} elements")
    rng = random.Random(args.seed)
    totals: dict[str, list[int]] = {}
    descriptions: dict[str, str] = {}
    witnessed = 0
    failed: IdentityReport | None = None
    for t in range(trials):
        n = rng.randint(1, max_n)
        m = rng.randint(1, max_m)
        cov = random_covering(n, m, rng)
        report = verify_identities(
            cov, exhaustive=n <= EXHAUSTIVE_LIMIT, samples=args.samples, seed=args.seed + t
        )
        for r in report.results:
            tot = totals.setdefault(r.name, [0, 0])
            tot[0] += r.checked
            tot[1] += 0 if r.passed else 1
            descriptions[r.name] = r.description
        if report.legacy_witnesses:
            witnessed += 1
        if failed is None and not report.passed:
            failed = report
    print(f"random coverings: {trials} (n <= {max_n}, m <= {max_m}, seed {args.seed})")
    for name, (checks, bad) in totals.items():
        status = "PASS" if bad == 0 else "FAIL"
        print(f"{status}  {name:<28} checks={checks:<8} failing_coverings={bad}  {descriptions[name]}")
    print(f"coverings where legacy differs from corrected: {witnessed}")
    if failed is not None:
        _print_failure(failed)
        return EXIT_IDENTITY_FAILED
    return EXIT_OK


def cmd_verify(args) -> int:
    if (args.covering is None) == (args.random is None):
        raise CovroughError("verify needs exactly one of a covering file or --random N M TRIALS")
    if args.random is not None:
        return _verify_random(args)
    return _verify_file(args)


def cmd_gen(args) -> int:
    if args.n < 1 or args.m < 1:
        raise CovroughError("gen needs n >= 1 and m >= 1")
    sys.stdout.write(random_covering_text(args.n, args.m, args.seed))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="covrough", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, routes):
        sp.add_argument("covering", help="covering file ('-' not supported)")
        sp.add_argument("--scheme", choices=SCHEMES, required=True)
        sp.add_argument("--bound", choices=["lower", "upper"], required=True)
        sp.add_argument("--route", choices=routes, default="matrix")
        sp.add_argument("--dump-matrices", action="store_true", help="print M, Gamma and Pi first")

    c = sub.add_parser("compute", help="approximate one set")
    common(c, ["oracle", "matrix", "legacy"])
    c.add_argument("--set", required=True, help="comma-separated elements; '' is the empty set")
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("table", help="approximate every set listed in a file")
    common(t, ["oracle", "matrix", "legacy", "both"])
    t.add_argument("--sets", required=True, help="file with one set per line")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="check every matrix formula against the definitions")
    v.add_argument("covering", nargs="?")
    v.add_argument("--random", nargs=3, type=int, metavar=("N", "M", "TRIALS"))
    v.add_argument("--exhaustive", action="store_true")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=256, help="subsets probed when not exhaustive")
    v.add_argument("--witnesses", type=int, default=64, help="max legacy witnesses to list")
    v.add_argument("--dump-matrices", action="store_true")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="emit a random covering file")
    g.add_argument("n", type=int)
    g.add_argument("m", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RouteSchemeMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ROUTE
    except CovroughError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
