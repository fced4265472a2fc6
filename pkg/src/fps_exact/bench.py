"""Timing harness for the power algorithms on both kernel backends."""
from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass
from typing import List, Sequence

from . import _backend
from .series import PowerAlgorithm, clear_caches, power_with_count
from .verify import DEFAULT_SEED, random_series

FIELDS = ("algorithm", "backend", "order", "k", "term_count", "wall_time_s")


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    backend: str
    order: int
    k: int
    term_count: int
    wall_time: float


def bench_series(order: int, seed: int):
    # one independent stream per order, so ranges can be split without changing inputs
    return random_series(random.Random(seed * 1000003 + order), order, nonzero=True)


def run_pow_bench(
    orders: Sequence[int],
    k: int,
    *,
    repeats: int = 3,
    algorithms: Sequence[PowerAlgorithm] = tuple(PowerAlgorithm),
    backends: Sequence[str] = ("auto",),
    seed: int = DEFAULT_SEED,
) -> List[BenchRecord]:
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    records = []
    for order in orders:
        f = bench_series(order, seed)
        for backend in backends:
            with _backend.use_backend(backend) as kern:
                for alg in algorithms:
                    if k < 0 and not alg.negative_k:
                        continue
                    best = None
                    count = None
                    for _ in range(repeats):
                        clear_caches()
                        t0 = time.perf_counter()
                        _, count = power_with_count(f, k, alg)
                        elapsed = time.perf_counter() - t0
                        best = elapsed if best is None else min(best, elapsed)
                    records.append(BenchRecord(alg.value, kern.BACKEND_NAME, order, k, count, max(best, 1e-9)))
    return records


def records_to_csv(records: Sequence[BenchRecord], *, with_time: bool = True) -> str:
    buf = io.StringIO()
    fields = FIELDS if with_time else FIELDS[:-1]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for r in records:
        row = [r.algorithm, r.backend, r.order, r.k, r.term_count]
        if with_time:
            row.append(f"{r.wall_time:.6f}")
        writer.writerow(row)
    return buf.getvalue()
