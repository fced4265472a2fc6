"""Bernoulli, generalized Bernoulli and Stirling numbers, power sums.

Convention: the Bernoulli numbers are the scaled coefficients of the
reciprocal of ``1 + sum X^n/(n+1)!``, so ``B_1 = -1/2``. The generalized
numbers ``B_n^(m)`` are ``n!`` times the coefficients of the ``(-m)``-th power
of the same series, for any integer ``m``.
"""
from __future__ import annotations

import functools
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from . import _backend
from .hessenberg import HessenbergSpec, det_prefixes
from .rational import binomial, factorial
from .series import TruncatedSeries, inverse_recursive, pow_miller

BERNOULLI_METHODS = ("series", "determinant", "trudi")
GEN_BERNOULLI_METHODS = ("power", "multinomial_neg", "multinomial_pos")
STIRLING_METHODS = ("multinomial", "paper_recurrence", "classic")
POWER_SUM_METHODS = ("bernoulli", "stirling", "direct")


@dataclass(frozen=True)
class BernoulliTable:
    values: Tuple[Fraction, ...]

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class GenBernoulliTable:
    m: int
    values: Tuple[Fraction, ...]

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class StirlingTable:
    """Rows ``values[n] = (S(n,0), ..., S(n,n))``."""

    values: Tuple[Tuple[int, ...], ...]

    def __call__(self, n: int, k: int) -> int:
        if k < 0 or k > n:
            return 0
        return self.values[n][k]

    def row(self, n: int) -> Tuple[int, ...]:
        return self.values[n]


def _check_method(method: str, allowed) -> None:
    if method not in allowed:
        raise ValueError(f"unknown method {method!r}; expected one of {', '.join(allowed)}")


def exp_shift_series(N: int) -> TruncatedSeries:
    """``1 + X/2! + X^2/3! + ... + X^N/(N+1)!``."""
    return TruncatedSeries(tuple(Fraction(1, factorial(n + 1)) for n in range(N + 1)))


def bernoulli_table(N: int, method: str = "series") -> BernoulliTable:
    if N < 0:
        raise ValueError("N must be >= 0")
    _check_method(method, BERNOULLI_METHODS)
    if method == "series":
        inv = inverse_recursive(exp_shift_series(N))
        values = [factorial(n) * c for n, c in enumerate(inv)]
    elif method == "determinant":
        band = [Fraction(1)] + [Fraction(1, factorial(i + 1)) for i in range(1, N + 1)]
        dets = det_prefixes(HessenbergSpec(tuple(band), N))
        values = [(-1) ** n * factorial(n) * d for n, d in enumerate(dets)]
    else:
        a = [Fraction(0)] + [Fraction(-1, factorial(i + 1)) for i in range(1, N + 1)]
        values = []
        for n in range(N + 1):
            c, _ = _backend.kernels.partition_sums(a, n)
            values.append(factorial(n) * sum(c, Fraction(0)))
    return BernoulliTable(tuple(values))


class _PrefixCache:
    """Per-key prefix tables recomputed at double size when outgrown."""

    def __init__(self, compute):
        self._compute = compute
        self._tables = {}
        self._lock = threading.Lock()

    def get(self, key, n):
        table = self._tables.get(key)
        if table is None or len(table) <= n:
            with self._lock:
                table = self._tables.get(key)
                if table is None or len(table) <= n:
                    table = self._compute(key, max(2 * n, 16))
                    self._tables[key] = table
        return table

    def clear(self):
        with self._lock:
            self._tables.clear()


_bernoulli_cache = _PrefixCache(lambda _key, N: bernoulli_table(N, "series").values)


def _bernoulli(N: int) -> Tuple[Fraction, ...]:
    return _bernoulli_cache.get(None, N)


def bernoulli(n: int) -> Fraction:
    """B_n (with B_1 = -1/2)."""
    return _bernoulli(n)[n]


@functools.lru_cache(maxsize=64)
def _partition_sum_rows(kind: str, N: int):
    if kind == "exp_shift":
        a = [Fraction(0)] + [Fraction(1, factorial(i + 1)) for i in range(1, N + 1)]
    else:
        B = _bernoulli(N)
        a = [Fraction(0)] + [B[i] / factorial(i) for i in range(1, N + 1)]
    return tuple(tuple(_backend.kernels.partition_sums(a, n)[0]) for n in range(N + 1))


def gen_bernoulli_table(m: int, N: int, method: str = "power") -> GenBernoulliTable:
    if N < 0:
        raise ValueError("N must be >= 0")
    _check_method(method, GEN_BERNOULLI_METHODS)
    if method == "power":
        coeffs = pow_miller(exp_shift_series(N), -m)
        values = [factorial(n) * c for n, c in enumerate(coeffs)]
    elif method == "multinomial_neg":
        rows = _partition_sum_rows("exp_shift", N)
        values = []
        for n, c in enumerate(rows):
            s = sum(
                ((-1) ** l * binomial(m + l - 1, l) * c[l] for l in range(n + 1) if c[l]),
                Fraction(0),
            )
            values.append(factorial(n) * s)
    else:
        rows = _partition_sum_rows("bernoulli", N)
        values = []
        for n, c in enumerate(rows):
            s = sum((binomial(m, l) * c[l] for l in range(n + 1) if c[l]), Fraction(0))
            values.append(factorial(n) * s)
    return GenBernoulliTable(m, tuple(values))


_gen_bernoulli_cache = _PrefixCache(lambda m, N: gen_bernoulli_table(m, N, "power").values)


def gen_bernoulli(m: int, n: int) -> Fraction:
    """B_n^(m) for any integer m."""
    return _gen_bernoulli_cache.get(m, n)[n]


def stirling_table(N: int, method: str = "classic") -> StirlingTable:
    if N < 0:
        raise ValueError("N must be >= 0")
    _check_method(method, STIRLING_METHODS)
    if method == "classic":
        rows = [(1,)]
        for n in range(1, N + 1):
            prev = rows[-1]
            row = [0] * (n + 1)
            for k in range(1, n + 1):
                row[k] = (k * prev[k] if k < n else 0) + prev[k - 1]
            rows.append(tuple(row))
        return StirlingTable(tuple(rows))
    if method == "paper_recurrence":
        # S(n+1, k+1) = 1/(k+1) sum_{i=1}^{n+1-k} C(n+1, i) S(n+1-i, k)
        S = [[0] * (N + 1) for _ in range(N + 1)]
        S[0][0] = 1
        for k in range(N):
            for n in range(k, N):
                total = 0
                for i in range(1, n + 2 - k):
                    total += binomial(n + 1, i) * S[n + 1 - i][k]
                q, r = divmod(total, k + 1)
                if r:
                    raise ArithmeticError(f"non-integral S({n + 1},{k + 1})")
                S[n + 1][k + 1] = q
        return StirlingTable(tuple(tuple(S[n][: n + 1]) for n in range(N + 1)))
    a = [Fraction(0)] + [Fraction(1, factorial(i)) for i in range(1, N + 1)]
    rows = []
    for n in range(N + 1):
        c, _ = _backend.kernels.partition_sums(a, n)
        row = []
        for k in range(n + 1):
            # c[k] carries k! * sum prod (1/i!)^k_i / k_i!
            v = Fraction(factorial(n), factorial(k)) * c[k]
            if v.denominator != 1:
                raise ArithmeticError(f"non-integral S({n},{k}) = {v}")
            row.append(v.numerator)
        rows.append(tuple(row))
    return StirlingTable(tuple(rows))


_stirling_cache = _PrefixCache(lambda _key, N: stirling_table(N, "classic").values)


def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return _stirling_cache.get(None, n)[n][k]


def power_sum(m: int, n: int, method: str = "bernoulli") -> int:
    """``0^m + 1^m + ... + n^m`` with ``0^0 = 1``; for m >= 1 this is 1^m + ... + n^m."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be >= 0")
    _check_method(method, POWER_SUM_METHODS)
    if method == "direct":
        return sum(i ** m for i in range(n + 1))
    if method == "bernoulli":
        total = sum(
            (binomial(m + 1, j) * (n + 1) ** (m - j + 1) * bernoulli(j) for j in range(m + 1)),
            Fraction(0),
        )
        value = total / (m + 1)
    else:
        value = Fraction(sum(binomial(n + 1, j + 1) * factorial(j) * stirling2(m, j) for j in range(n + 1)))
    if value.denominator != 1:
        raise ArithmeticError(f"power sum came out non-integral: {value}")
    return value.numerator
