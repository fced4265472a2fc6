"""Toeplitz-Hessenberg determinants and weighted-partition enumeration.

``TH_n(a_0, ..., a_n)`` is the n x n matrix with ``a_1`` on the diagonal,
``a_j`` on the (j-1)-th superdiagonal and ``a_0`` on the single subdiagonal.
Determinants are transpose invariant, so no transposition is performed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple

from . import _backend
from .rational import RationalLike, to_fraction


@dataclass(frozen=True)
class HessenbergSpec:
    band: Tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        band = tuple(to_fraction(x) for x in self.band)
        object.__setattr__(self, "band", band)
        if self.order < 0:
            raise ValueError("order must be >= 0")
        if len(band) != self.order + 1:
            raise ValueError(
                f"band needs exactly order+1 = {self.order + 1} entries, got {len(band)}"
            )

    @classmethod
    def from_band(cls, band: Sequence[RationalLike], order: Optional[int] = None) -> "HessenbergSpec":
        """Build a spec from ``(a_0, ..., a_n)``; with ``order`` given, extra entries are dropped."""
        band = list(band)
        if not band:
            raise ValueError("band must contain at least a_0")
        if order is None:
            order = len(band) - 1
        if order + 1 > len(band):
            raise ValueError(f"order {order} needs {order + 1} band entries, got {len(band)}")
        return cls(tuple(band[: order + 1]), order)

    def matrix(self):
        """Dense matrix as a list of rows (used by tests and debugging)."""
        n = self.order
        a = self.band
        rows = []
        for r in range(n):
            row = []
            for c in range(n):
                if c >= r:
                    row.append(a[c - r + 1])
                elif c == r - 1:
                    row.append(a[0])
                else:
                    row.append(Fraction(0))
            rows.append(row)
        return rows


@dataclass(frozen=True)
class WeightedPartition:
    multiplicities: Tuple[int, ...]
    weight: int
    parts: int

    @classmethod
    def from_multiplicities(cls, mult: Sequence[int]) -> "WeightedPartition":
        mult = tuple(mult)
        weight = sum(i * k for i, k in enumerate(mult, start=1))
        return cls(mult, weight, sum(mult))

    def part_list(self) -> Tuple[int, ...]:
        """Parts in non-increasing order, e.g. ``(3, 1, 1)``."""
        out = []
        for i in range(len(self.multiplicities), 0, -1):
            out.extend([i] * self.multiplicities[i - 1])
        return tuple(out)


@dataclass(frozen=True)
class DeltaPolynomial:
    """The polynomial delta(-X, a_1, ..., a_n) stored by number of parts.

    ``coeffs_by_parts[l]`` multiplies ``X**(n - l)``.
    """

    coeffs_by_parts: Tuple[Fraction, ...]
    degree: int

    def evaluate(self, x: RationalLike) -> Fraction:
        """Value at X = x, i.e. det(TH_n) with subdiagonal entry ``-x``."""
        x = to_fraction(x)
        n = self.degree
        total = Fraction(0)
        for l, c in enumerate(self.coeffs_by_parts):
            if c:
                total += c * x ** (n - l)
        return total


def enumerate_weighted_partitions(n: int) -> Iterator[WeightedPartition]:
    """All ``(k_1..k_n)`` with ``sum(i*k_i) == n``, largest part first."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for mult in _backend.kernels.weighted_partitions(n):
        yield WeightedPartition(mult, n, sum(mult))


def _as_spec(spec) -> HessenbergSpec:
    if isinstance(spec, HessenbergSpec):
        return spec
    return HessenbergSpec.from_band(spec)


def det_recursive(spec) -> Fraction:
    """det(TH_n) by the first-row expansion recurrence, O(n^2)."""
    spec = _as_spec(spec)
    if spec.order == 0:
        return Fraction(1)
    return _backend.kernels.hessenberg_dets(list(spec.band))[-1]


def det_prefixes(spec) -> list:
    """``[det(TH_0), ..., det(TH_n)]`` from one pass of the recurrence."""
    spec = _as_spec(spec)
    return _backend.kernels.hessenberg_dets(list(spec.band))


def det_trudi(spec) -> Fraction:
    """det(TH_n) by Trudi's multinomial expansion over weighted partitions."""
    spec = _as_spec(spec)
    n = spec.order
    if n == 0:
        return Fraction(1)
    c, _ = _backend.kernels.partition_sums(list(spec.band), n)
    neg_a0 = -spec.band[0]
    total = Fraction(0)
    for l in range(1, n + 1):
        if c[l]:
            total += c[l] * neg_a0 ** (n - l)
    return total


def det_composition(spec) -> Fraction:
    """det(TH_n) as a sum over compositions of n (exponential in n)."""
    spec = _as_spec(spec)
    n = spec.order
    if n == 0:
        return Fraction(1)
    a = spec.band
    neg_a0 = -a[0]
    total = Fraction(0)
    for k in range(1, n + 1):
        inner = Fraction(0)
        # a composition into k parts <-> k-1 cut points among 1..n-1
        for cuts in itertools.combinations(range(1, n), k - 1):
            prev = 0
            prod = Fraction(1)
            for cut in cuts + (n,):
                prod *= a[cut - prev]
                if not prod:
                    break
                prev = cut
            inner += prod
        if inner:
            total += neg_a0 ** (n - k) * inner
    return total


def delta_polynomial(a: Sequence[RationalLike], n: int) -> DeltaPolynomial:
    """Coefficients of delta(-X, a_1..a_n); ``a`` holds a_1, a_2, ... (no a_0)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if len(a) < n:
        raise ValueError(f"delta_polynomial of degree {n} needs {n} entries, got {len(a)}")
    padded = [Fraction(0)] + [to_fraction(x) for x in a[:n]]
    c, _ = _backend.kernels.partition_sums(padded, n)
    return DeltaPolynomial(tuple(c), n)
