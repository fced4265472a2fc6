"""Verification suites used by ``fps-exact verify`` and the acceptance tests."""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence

from .hessenberg import HessenbergSpec, det_composition, det_recursive, det_trudi
from .identities import REGISTRY, parameter_grid, verify_identity
from .numbers import (
    bernoulli_table,
    gen_bernoulli_table,
    power_sum,
    stirling_table,
)
from .partitions import (
    partition_det_table,
    partition_pentagonal,
    pentagonal_coeffs,
    pentagonal_det,
    verify_euler_product,
    verify_gf_identity,
)
from .reports import IdentityReport
from .series import (
    TruncatedSeries,
    applicable_algorithms,
    inverse_recursive,
    inverse_wronski,
    mul,
    pow_miller,
    power,
    verify_binomial_transform,
    verify_negative_binomial_corollary,
)

DEFAULT_SEED = 20240917
SUITES = ("all", "series", "numbers", "partitions")

Task = Callable[[], List[IdentityReport]]


def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    """Numerator in [-9, 9], denominator in [-9, 9] without 0."""
    while True:
        num = rng.randint(-9, 9)
        den = rng.choice([d for d in range(-9, 10) if d])
        if num or not nonzero:
            return Fraction(num, den)


def random_series(rng: random.Random, order: int, *, unit: bool = True, nonzero: bool = False) -> TruncatedSeries:
    coeffs = [random_rational(rng, nonzero=unit or nonzero)]
    coeffs += [random_rational(rng, nonzero=nonzero) for _ in range(order)]
    return TruncatedSeries(tuple(coeffs))


def random_band(rng: random.Random, order: int) -> HessenbergSpec:
    return HessenbergSpec(tuple(random_rational(rng) for _ in range(order + 1)), order)


def _series_payload(f: TruncatedSeries):
    return f.to_json()["coeffs"]


def power_agreement(f: TruncatedSeries, k: int, max_closed_order: int | None = None) -> List[IdentityReport]:
    ref = pow_miller(f, k)
    out = []
    for alg in applicable_algorithms(k):
        if alg.value == "miller":
            continue
        if alg.value == "closed_form" and max_closed_order is not None and f.order > max_closed_order:
            continue
        got = power(f, k, alg)
        out.append(
            IdentityReport(
                "pow_agreement",
                {"algorithm": alg.value, "k": k, "series": _series_payload(f)},
                got.coeffs,
                ref.coeffs,
            )
        )
    return out


def inverse_agreement(f: TruncatedSeries) -> List[IdentityReport]:
    w = inverse_wronski(f)
    r = inverse_recursive(f)
    params = {"series": _series_payload(f)}
    return [
        IdentityReport("inverse_agreement", params, w.coeffs, r.coeffs),
        IdentityReport("inverse_product", params, mul(f, w).coeffs, TruncatedSeries.one(f.order).coeffs),
    ]


def det_agreement(spec: HessenbergSpec) -> List[IdentityReport]:
    ref = det_recursive(spec)
    params = {"band": [str(x) for x in spec.band]}
    return [
        IdentityReport("det_agreement", dict(params, method="trudi"), det_trudi(spec), ref),
        IdentityReport("det_agreement", dict(params, method="composition"), det_composition(spec), ref),
    ]


def _series_tasks(max_n: int, k_lo: int, k_hi: int, seed: int, count: int) -> List[Task]:
    rng = random.Random(seed)
    tasks: List[Task] = []
    for _ in range(count):
        f = random_series(rng, rng.randint(1, max_n))
        ks = list(range(k_lo, k_hi + 1))

        def check(f=f, ks=ks):
            reports = []
            for k in ks:
                reports.extend(power_agreement(f, k))
            reports.extend(inverse_agreement(f))
            monic = f.scale(1 / f[0])
            for k in ks:
                reports.append(verify_binomial_transform(monic, k, monic.order))
            return reports

        tasks.append(check)
    for _ in range(count):
        spec = random_band(rng, rng.randint(0, min(max_n, 10)))
        tasks.append(lambda spec=spec: det_agreement(spec))
    for k in range(1, max(k_hi, 1) + 1):
        tasks.append(lambda k=k: [verify_negative_binomial_corollary(k, n) for n in range(max_n + 1)])
    return tasks


def _table_reports(max_n: int, k_lo: int, k_hi: int) -> List[Task]:
    def bern():
        ref = bernoulli_table(max_n, "series").values
        return [
            IdentityReport("bernoulli_methods", {"method": m, "N": max_n}, bernoulli_table(max_n, m).values, ref)
            for m in ("determinant", "trudi")
        ]

    def genb(m):
        ref = gen_bernoulli_table(m, max_n, "power").values
        return [
            IdentityReport("gen_bernoulli_methods", {"method": meth, "m": m, "N": max_n},
                           gen_bernoulli_table(m, max_n, meth).values, ref)
            for meth in ("multinomial_neg", "multinomial_pos")
        ]

    def stir():
        ref = stirling_table(max_n, "classic").values
        return [
            IdentityReport("stirling_methods", {"method": meth, "N": max_n, "n": n},
                           stirling_table(max_n, meth).values[n], ref[n])
            for meth in ("multinomial", "paper_recurrence")
            for n in range(max_n + 1)
        ]

    def psum(m):
        return [
            IdentityReport("power_sum_methods", {"m": m, "n": n},
                           (power_sum(m, n, "bernoulli"), power_sum(m, n, "stirling")),
                           (power_sum(m, n, "direct"),) * 2)
            for n in range(max_n + 1)
        ]

    tasks: List[Task] = [bern, stir]
    tasks += [lambda m=m: genb(m) for m in range(k_lo, k_hi + 1)]
    tasks += [lambda m=m: psum(m) for m in range(0, 11)]
    return tasks


def _numbers_tasks(max_n: int, k_lo: int, k_hi: int, identity: str | None) -> List[Task]:
    ids = [identity] if identity else list(REGISTRY)
    tasks: List[Task] = []
    for iid in ids:
        grid = parameter_grid(iid, max_n, k_lo, k_hi)
        tasks.append(lambda iid=iid, grid=grid: [verify_identity(iid, **p) for p in grid])
    if identity is None:
        tasks += _table_reports(max_n, k_lo, k_hi)
    return tasks


def _partition_tasks(max_n: int) -> List[Task]:
    def tables():
        p = partition_pentagonal(max_n).values
        return [
            IdentityReport("partition_det", {"N": max_n}, partition_det_table(max_n).values, p),
            IdentityReport(
                "pentagonal_det",
                {"N": max_n},
                tuple(pentagonal_det(n) for n in range(1, max_n + 1)),
                pentagonal_coeffs(max_n).coeffs[1:],
            ),
        ]

    return [
        tables,
        lambda: [verify_gf_identity(max_n)],
        lambda: [verify_euler_product(max_n)],
    ]


def build_tasks(suite: str, *, max_n: int, k_lo: int, k_hi: int, seed: int = DEFAULT_SEED,
                identity: str | None = None, series_count: int = 10) -> List[Task]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    tasks: List[Task] = []
    if identity is not None:
        if identity not in REGISTRY:
            raise KeyError(identity)
        return _numbers_tasks(max_n, k_lo, k_hi, identity)
    if suite in ("all", "series"):
        tasks += _series_tasks(max_n, k_lo, k_hi, seed, series_count)
    if suite in ("all", "numbers"):
        tasks += _numbers_tasks(max_n, k_lo, k_hi, None)
    if suite in ("all", "partitions"):
        tasks += _partition_tasks(max_n)
    return tasks


def run_tasks(tasks: Sequence[Task], jobs: int = 1) -> List[IdentityReport]:
    """Run tasks, preserving task order in the output regardless of ``jobs``."""
    if jobs <= 1:
        batches: Iterable[List[IdentityReport]] = [t() for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(lambda t: t(), tasks))
    return [r for batch in batches for r in batch]
