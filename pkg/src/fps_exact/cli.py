"""Command line interface: ``fps-exact <subcommand> ...``.

Exit status: 0 on success, 1 when an identity fails or an input is not
invertible, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from collections import Counter
from typing import List, Optional, Sequence

from . import _backend
from .bench import records_to_csv, run_pow_bench
from .errors import HypothesisViolation, NonInvertibleError
from .hessenberg import HessenbergSpec, det_composition, det_recursive, det_trudi
from .numbers import bernoulli_table, gen_bernoulli_table, power_sum, stirling_table
from .partitions import partition_det_table, partition_pentagonal
from .rational import format_rational, parse_rational_list
from .series import (
    PowerAlgorithm,
    TruncatedSeries,
    applicable_algorithms,
    inverse_recursive,
    inverse_wronski,
    power,
)
from .verify import DEFAULT_SEED, SUITES, build_tasks, run_tasks

POW_ALGS = {
    "miller": PowerAlgorithm.MILLER,
    "closed": PowerAlgorithm.CLOSED_FORM,
    "double": PowerAlgorithm.DOUBLE_SUM,
    "hat": PowerAlgorithm.HAT,
    "nested": PowerAlgorithm.NESTED,
    "deriv": PowerAlgorithm.DERIVATIVE,
}
POW_ALG_NAMES = {v: k for k, v in POW_ALGS.items()}


class UsageError(Exception):
    pass


def _int_range(text: str):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _write_table(out, rows: Sequence[Sequence], header: Sequence[str], fmt: str) -> None:
    if fmt == "json":
        out.write(json.dumps([r[-1] for r in rows] if len(header) == 2 else [list(r) for r in rows],
                             separators=(",", ":")) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _load_series(args) -> TruncatedSeries:
    if args.series and args.coeffs:
        raise UsageError("give either --series or --coeffs, not both")
    if args.series:
        try:
            with open(args.series, encoding="utf-8") as fh:
                f = TruncatedSeries.from_json(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read series file: {exc}") from None
        except (ValueError, json.JSONDecodeError) as exc:
            raise UsageError(f"bad series file {args.series}: {exc}") from None
    elif args.coeffs:
        try:
            f = TruncatedSeries.from_coeffs(parse_rational_list(args.coeffs))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        raise UsageError("one of --series or --coeffs is required")
    if args.order is not None:
        f = TruncatedSeries.from_coeffs(f.coeffs, args.order)
    return f


def _series_rows(f: TruncatedSeries):
    return [(n, format_rational(c)) for n, c in enumerate(f)]


def cmd_pow(args, out) -> int:
    f = _load_series(args)
    if args.alg == "all":
        algs = applicable_algorithms(args.k)
        results = {alg: power(f, args.k, alg) for alg in algs}
        ref = results[PowerAlgorithm.MILLER]
        _write_table(out, _series_rows(ref), ("n", "value"), args.format)
        names = ",".join(POW_ALG_NAMES[a] for a in algs)
        disagree = [POW_ALG_NAMES[a] for a, r in results.items() if r != ref]
        if disagree:
            out.write(f"# DISAGREEMENT: {','.join(disagree)} differ from miller\n")
            return 1
        out.write(f"# all algorithms agree: {names}\n")
        return 0
    alg = POW_ALGS[args.alg]
    if args.k < 0 and not alg.negative_k:
        raise UsageError(f"--alg {args.alg} needs --k >= 0")
    _write_table(out, _series_rows(power(f, args.k, alg)), ("n", "value"), args.format)
    return 0


def cmd_inv(args, out) -> int:
    f = _load_series(args)
    if args.alg == "recursive":
        g = inverse_recursive(f)
    elif args.alg == "wronski":
        g = inverse_wronski(f)
    else:
        g = inverse_recursive(f)
        w = inverse_wronski(f)
        _write_table(out, _series_rows(g), ("n", "value"), args.format)
        if g != w:
            out.write("# DISAGREEMENT: wronski differs from recursive\n")
            return 1
        out.write("# recursive and wronski agree\n")
        return 0
    _write_table(out, _series_rows(g), ("n", "value"), args.format)
    return 0


def cmd_det(args, out) -> int:
    try:
        spec = HessenbergSpec.from_band(parse_rational_list(args.band))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    methods = {"recursive": det_recursive, "trudi": det_trudi, "composition": det_composition}
    if args.alg != "all":
        out.write(format_rational(methods[args.alg](spec)) + "\n")
        return 0
    values = {name: fn(spec) for name, fn in methods.items()}
    ref = values["recursive"]
    if all(v == ref for v in values.values()):
        out.write(f"{format_rational(ref)} (all methods agree)\n")
        return 0
    detail = ", ".join(f"{k}={format_rational(v)}" for k, v in values.items())
    out.write(f"DISAGREEMENT: {detail}\n")
    return 1


def cmd_bernoulli(args, out) -> int:
    table = bernoulli_table(args.max, args.method)
    _write_table(out, [(n, format_rational(v)) for n, v in enumerate(table.values)], ("n", "value"), args.format)
    return 0


def cmd_genbernoulli(args, out) -> int:
    table = gen_bernoulli_table(args.m, args.max, args.method.replace("-", "_"))
    _write_table(out, [(n, format_rational(v)) for n, v in enumerate(table.values)], ("n", "value"), args.format)
    return 0


def cmd_stirling(args, out) -> int:
    method = {"paper": "paper_recurrence"}.get(args.method, args.method)
    table = stirling_table(args.max, method)
    rows = [(n, k, v) for n, row in enumerate(table.values) for k, v in enumerate(row)]
    if args.format == "json":
        out.write(json.dumps([list(r) for r in table.values], separators=(",", ":")) + "\n")
    else:
        _write_table(out, rows, ("n", "k", "value"), "csv")
    return 0


def cmd_partition(args, out) -> int:
    if args.method == "pentagonal":
        table = partition_pentagonal(args.max)
    else:
        table = partition_det_table(args.max)
    _write_table(out, list(enumerate(table.values)), ("n", "p"), args.format)
    return 0


def cmd_powersum(args, out) -> int:
    out.write(f"{power_sum(args.m, args.n, args.method)}\n")
    return 0


def cmd_verify(args, out) -> int:
    k_lo, k_hi = args.k_range
    try:
        tasks = build_tasks(args.suite, max_n=args.max_n, k_lo=k_lo, k_hi=k_hi, seed=args.seed,
                            identity=args.id, series_count=args.series_count)
    except KeyError as exc:
        raise UsageError(f"unknown identity {exc.args[0]!r}") from None
    reports = run_tasks(tasks, jobs=args.jobs)
    stats: Counter = Counter()
    order: List[str] = []
    first_flag = {}
    for r in reports:
        if r.identity not in stats:
            order.append(r.identity)
        stats[r.identity] += 1
        stats[(r.identity, "pass")] += r.passed
        stats[(r.identity, "flag")] += r.flagged
        if not r.passed or (r.flagged and args.all_reports):
            out.write(r.to_json() + "\n")
        elif r.flagged and r.identity not in first_flag:
            first_flag[r.identity] = r
            out.write(r.to_json() + "\n")
        elif args.all_reports:
            out.write(r.to_json() + "\n")
    failed = 0
    for iid in order:
        n, p, fl = stats[iid], stats[(iid, "pass")], stats[(iid, "flag")]
        failed += n - p
        out.write(f"# {iid}: checked={n} passed={p} flagged={fl}\n")
    total = len(reports)
    if failed:
        out.write(f"# FAILED: {failed} of {total} reports\n")
        return 1
    out.write(f"# OK: {total} reports passed\n")
    return 0


def cmd_bench(args, out) -> int:
    lo, hi = args.order_range
    if lo < 0:
        raise UsageError("--order-range must be nonnegative")
    if args.algs:
        unknown = [a for a in args.algs.split(",") if a not in POW_ALGS]
        if unknown:
            raise UsageError(f"unknown algorithm(s) in --algs: {','.join(unknown)}")
    algs = [POW_ALGS[a] for a in args.algs.split(",")] if args.algs else list(PowerAlgorithm)
    backends = ["python", "compiled"] if args.backend == "both" else [args.backend]
    if "compiled" in backends and not _backend.compiled_available():
        raise UsageError("compiled kernels are not built; use --backend python")
    records = run_pow_bench(range(lo, hi + 1), args.k, repeats=args.repeats, algorithms=algs,
                            backends=backends, seed=args.seed)
    out.write(records_to_csv(records, with_time=not args.omit_time))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fps-exact", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def series_opts(p):
        p.add_argument("--series", help='JSON file {"order": N, "coeffs": ["1", "-1/2", ...]}')
        p.add_argument("--coeffs", help='inline coefficients, e.g. "1,-1/2,1/6"')
        p.add_argument("--order", type=_natural, help="zero-pad or cut the input to this order")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("pow", help="k-th power of a series")
    series_opts(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alg", choices=(*POW_ALGS, "all"), default="miller")
    p.set_defaults(func=cmd_pow)

    p = sub.add_parser("inv", help="inverse of a series")
    series_opts(p)
    p.add_argument("--alg", choices=("recursive", "wronski", "both"), default="recursive")
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("det", help="Toeplitz-Hessenberg determinant of a band a0,a1,...,an")
    p.add_argument("--band", required=True)
    p.add_argument("--alg", choices=("recursive", "trudi", "composition", "all"), default="recursive")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("bernoulli", help="Bernoulli numbers B_0..B_N (B_1 = -1/2)")
    p.add_argument("--max", type=_natural, required=True)
    p.add_argument("--method", choices=("series", "determinant", "trudi"), default="series")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("genbernoulli", help="generalized Bernoulli numbers B_n^(m)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max", type=_natural, required=True)
    p.add_argument("--method", choices=("power", "multinomial-neg", "multinomial-pos"), default="power")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_genbernoulli)

    p = sub.add_parser("stirling", help="Stirling numbers of the second kind")
    p.add_argument("--max", type=_natural, required=True)
    p.add_argument("--method", choices=("multinomial", "paper", "classic"), default="classic")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("partition", help="partition numbers p(0..N)")
    p.add_argument("--max", type=_natural, required=True)
    p.add_argument("--method", choices=("pentagonal", "determinant"), default="pentagonal")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("powersum", help="0^m + 1^m + ... + n^m")
    p.add_argument("--m", type=_natural, required=True)
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--method", choices=("bernoulli", "stirling", "direct"), default="bernoulli")
    p.set_defaults(func=cmd_powersum)

    p = sub.add_parser("verify", help="run the identity verification suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--id", help="check a single registry identity")
    p.add_argument("--max-n", type=_natural, default=20)
    p.add_argument("--k-range", type=_int_range, default=(-6, 6), help="LO..HI, e.g. -6..6")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--series-count", type=_natural, default=10, help="random series / bands per run")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--all-reports", action="store_true", help="print every report, not only failures")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the power algorithms")
    p.add_argument("--op", choices=("pow",), default="pow")
    p.add_argument("--order-range", type=_int_range, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--repeats", type=_positive, default=3)
    p.add_argument("--algs", help="comma separated subset of " + ",".join(POW_ALGS))
    p.add_argument("--backend", choices=("auto", "python", "compiled", "both"), default="auto")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--format", choices=("csv",), default="csv")
    p.add_argument("--omit-time", action="store_true", help="drop the wall-time column (byte-stable output)")
    p.set_defaults(func=cmd_bench)
    return parser


RANGE_FLAGS = ("--k-range", "--order-range")


def _glue_ranges(argv: Sequence[str]) -> List[str]:
    # argparse reads "-6..6" as an option; glue it to its flag so both spellings work
    out: List[str] = []
    it = iter(argv)
    for tok in it:
        if tok in RANGE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    argv = _glue_ranges(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"fps-exact {args.command}: error: {exc}\n")
        return 2
    except HypothesisViolation as exc:
        sys.stderr.write(f"fps-exact {args.command}: error: {exc}\n")
        return 2
    except NonInvertibleError as exc:
        sys.stderr.write(f"fps-exact {args.command}: error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
