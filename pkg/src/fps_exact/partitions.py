"""Partition numbers p(n): pentagonal recurrence and Toeplitz-Hessenberg determinants."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .hessenberg import HessenbergSpec, det_prefixes, det_recursive
from .reports import IdentityReport
from .series import TruncatedSeries, mul


@dataclass(frozen=True)
class PentagonalSeries:
    """Coefficients of prod_{n>=1} (1 - X^n) up to X^N."""

    coeffs: Tuple[int, ...]

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)


@dataclass(frozen=True)
class PartitionTable:
    values: Tuple[int, ...]

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


def pentagonal_coeffs(N: int) -> PentagonalSeries:
    """+-1 at the generalized pentagonal numbers m(3m+1)/2, m in Z, sign (-1)^m."""
    if N < 0:
        raise ValueError("N must be >= 0")
    out = [0] * (N + 1)
    out[0] = 1
    m = 1
    while m * (3 * m - 1) // 2 <= N:
        sign = -1 if m % 2 else 1
        for e in (m * (3 * m - 1) // 2, m * (3 * m + 1) // 2):
            if e <= N:
                out[e] = sign
        m += 1
    return PentagonalSeries(tuple(out))


def partition_pentagonal(N: int) -> PartitionTable:
    """p(0..N) by Euler's pentagonal number recurrence, O(N^1.5)."""
    if N < 0:
        raise ValueError("N must be >= 0")
    p = [1] + [0] * N
    for m in range(1, N + 1):
        total = 0
        n = 1
        while True:
            g1 = (3 * n * n - n) // 2
            if g1 > m:
                break
            g2 = g1 + n
            term = p[m - g1] + (p[m - g2] if g2 <= m else 0)
            total += term if n % 2 else -term
            n += 1
        p[m] = total
    return PartitionTable(tuple(p))


def _pentagonal_band(n: int) -> HessenbergSpec:
    return HessenbergSpec(tuple(Fraction(c) for c in pentagonal_coeffs(n).coeffs), n)


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer determinant, got {x}")
    return x.numerator


def partition_det(n: int) -> int:
    """p(n) = (-1)^n det TH_n(1, a_1, ..., a_n) with pentagonal a_i."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    return (-1) ** n * _as_int(det_recursive(_pentagonal_band(n)))


def partition_det_table(N: int) -> PartitionTable:
    """p(0..N) from the prefix determinants of a single band."""
    if N < 0:
        raise ValueError("N must be >= 0")
    dets = det_prefixes(_pentagonal_band(N))
    return PartitionTable(tuple((-1) ** n * _as_int(d) for n, d in enumerate(dets)))


def pentagonal_det(n: int) -> int:
    """a_n = (-1)^n det TH_n(1, p(1), ..., p(n))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    p = partition_pentagonal(n)
    return (-1) ** n * _as_int(det_recursive(HessenbergSpec(tuple(Fraction(v) for v in p.values), n)))


def verify_gf_identity(N: int) -> IdentityReport:
    """(pentagonal series) * (1 + sum p(n) X^n) == 1 modulo X^(N+1)."""
    penta = TruncatedSeries.from_coeffs(pentagonal_coeffs(N).coeffs)
    gen = TruncatedSeries.from_coeffs(partition_pentagonal(N).values)
    prod = mul(penta, gen)
    return IdentityReport("partition_gf", {"N": N}, prod.coeffs, TruncatedSeries.one(N).coeffs)


def verify_euler_product(N: int) -> IdentityReport:
    """prod_{n=1..N} (1 - X^n) expanded by repeated multiplication vs the pentagonal coefficients."""
    acc = TruncatedSeries.one(N)
    for n in range(1, N + 1):
        factor = [0] * (N + 1)
        factor[0] = 1
        factor[n] = -1
        acc = mul(acc, TruncatedSeries.from_coeffs(factor))
    return IdentityReport("euler_product", {"N": N}, acc.coeffs, pentagonal_coeffs(N).coeffs)
