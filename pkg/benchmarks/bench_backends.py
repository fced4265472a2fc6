#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernels on the power algorithms.

Prints one row per (algorithm, order) with both timings and the speedup.
Results are checked for equality across backends before timing is reported.

    python3 benchmarks/bench_backends.py --order-range 6..20 --k 3
"""
from __future__ import annotations

import argparse
import sys

from fps_exact import _backend
from fps_exact.bench import bench_series, run_pow_bench
from fps_exact.cli import POW_ALGS, _int_range
from fps_exact.series import clear_caches, power
from fps_exact.verify import DEFAULT_SEED


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--order-range", type=_int_range, default=(6, 20))
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--algs", default="closed,double,hat,nested")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = parser.parse_args(argv)

    if not _backend.compiled_available():
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    algs = [POW_ALGS[a] for a in args.algs.split(",")]
    lo, hi = args.order_range
    orders = range(lo, hi + 1)

    for order in orders:
        f = bench_series(order, args.seed)
        for alg in algs:
            if args.k < 0 and not alg.negative_k:
                continue
            results = []
            for name in ("python", "compiled"):
                with _backend.use_backend(name):
                    clear_caches()
                    results.append(power(f, args.k, alg))
            if results[0] != results[1]:
                print(f"backend mismatch: {alg.value} order {order}", file=sys.stderr)
                return 1

    records = run_pow_bench(orders, args.k, repeats=args.repeats, algorithms=algs,
                            backends=("python", "compiled"), seed=args.seed)
    by_key = {(r.algorithm, r.order, r.backend): r for r in records}
    print(f"{'algorithm':<12}{'order':>6}{'terms':>10}{'python s':>12}{'compiled s':>12}{'speedup':>9}")
    for alg in algs:
        for order in orders:
            py = by_key.get((alg.value, order, "python"))
            cc = by_key.get((alg.value, order, "compiled"))
            if py is None:
                continue
            print(f"{alg.value:<12}{order:>6}{py.term_count:>10}{py.wall_time:>12.5f}"
                  f"{cc.wall_time:>12.5f}{py.wall_time / cc.wall_time:>8.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
