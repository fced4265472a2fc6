import csv
import io

from fps_exact import _backend
from fps_exact.bench import bench_series, records_to_csv, run_pow_bench
from fps_exact.series import PowerAlgorithm

from oracles import partition_counts


def test_term_counts():
    orders = range(1, 13)
    recs = run_pow_bench(orders, 3, repeats=1, algorithms=[PowerAlgorithm.MILLER, PowerAlgorithm.CLOSED_FORM],
                         backends=("python",))
    p = partition_counts(12)
    for r in recs:
        assert r.wall_time > 0
        if r.algorithm == "miller":
            assert r.term_count == r.order * (r.order + 1) // 2
        else:
            assert r.term_count == sum(p[1:r.order + 1])


def test_negative_k_skips_nonnegative_algorithms():
    recs = run_pow_bench([4], -2, repeats=1, backends=("python",))
    assert {r.algorithm for r in recs} == {"miller", "closed_form", "derivative"}


def test_backends_give_same_counts():
    backends = ("python", "compiled") if _backend.compiled_available() else ("python",)
    recs = run_pow_bench([6], 2, repeats=1, backends=backends)
    by_alg = {}
    for r in recs:
        by_alg.setdefault(r.algorithm, set()).add(r.term_count)
    assert all(len(v) == 1 for v in by_alg.values())


def test_csv_deterministic():
    a = records_to_csv(run_pow_bench([2, 3], 2, repeats=1), with_time=False)
    b = records_to_csv(run_pow_bench([2, 3], 2, repeats=1), with_time=False)
    assert a == b
    rows = list(csv.reader(io.StringIO(a)))
    assert rows[0] == ["algorithm", "backend", "order", "k", "term_count"]


def test_bench_series_nonzero_and_stable():
    f = bench_series(10, 1)
    assert all(c != 0 for c in f.coeffs)
    assert f == bench_series(10, 1)
