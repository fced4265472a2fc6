"""Truncated formal power series over the rationals.

A :class:`TruncatedSeries` of order N carries the coefficients a_0..a_N and
stands for the class of the series modulo X^(N+1). Arithmetic requires equal
orders; nothing is silently re-truncated.

Six algorithms for S**k are provided and must agree exactly:

========== ======================================== ==============
tag        method                                   k
========== ======================================== ==============
miller     Euler/J.C.P. Miller recurrence, O(N^2)   any integer
closed     bracket operator on delta polynomials    any integer
double     double sum over parts and partitions     k >= 0
hat        convolution with the auxiliary sequence  k >= 0
nested     recursion over lower powers              k >= 0
deriv      derivative relation n a_n = k sum ...     any integer
========== ======================================== ==============
"""
from __future__ import annotations

import enum
import functools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from . import _backend
from .errors import NonInvertibleError, OrderMismatchError
from .hessenberg import DeltaPolynomial, HessenbergSpec, det_prefixes
from .rational import (
    RationalLike,
    binomial,
    format_rational,
    parse_rational,
    to_fraction,
)
from .reports import IdentityReport


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(to_fraction(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    # construction helpers

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[RationalLike], order: int | None = None) -> "TruncatedSeries":
        """Series from leading coefficients, zero padded (or cut) to ``order``."""
        coeffs = [to_fraction(c) for c in coeffs]
        if order is None:
            return cls(tuple(coeffs))
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([1], order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([0], order)

    @classmethod
    def from_json(cls, obj: Any) -> "TruncatedSeries":
        """Parse ``{"order": N, "coeffs": ["1", "-1/2", ...]}`` (dict or JSON text)."""
        if isinstance(obj, (str, bytes)):
            obj = json.loads(obj)
        if not isinstance(obj, dict) or set(obj) != {"order", "coeffs"}:
            raise ValueError('series literal must be an object with keys "order" and "coeffs"')
        order = obj["order"]
        coeffs = obj["coeffs"]
        if not isinstance(order, int) or isinstance(order, bool) or order < 0:
            raise ValueError("order must be a nonnegative integer")
        if not isinstance(coeffs, list) or not all(isinstance(c, str) for c in coeffs):
            raise ValueError("coeffs must be a list of rational strings")
        if len(coeffs) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients for order {order}, got {len(coeffs)}")
        return cls(tuple(parse_rational(c) for c in coeffs))

    def to_json(self) -> Dict[str, Any]:
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    # sequence protocol

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}])"

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        _check_orders(self, other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # arithmetic

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        _check_orders(self, other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        _check_orders(self, other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def scale(self, c: RationalLike) -> "TruncatedSeries":
        c = to_fraction(c)
        return TruncatedSeries(tuple(c * a for a in self.coeffs))

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order of a series")
        return TruncatedSeries(self.coeffs[: order + 1])

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None


class PowerAlgorithm(enum.Enum):
    MILLER = "miller"
    CLOSED_FORM = "closed_form"
    DOUBLE_SUM = "double_sum"
    HAT = "hat"
    NESTED = "nested"
    DERIVATIVE = "derivative"

    @property
    def negative_k(self) -> bool:
        return self in (PowerAlgorithm.MILLER, PowerAlgorithm.CLOSED_FORM, PowerAlgorithm.DERIVATIVE)


def _check_orders(f: TruncatedSeries, g: TruncatedSeries) -> None:
    if f.order != g.order:
        raise OrderMismatchError(f"truncation orders differ: {f.order} vs {g.order}")


def mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    _check_orders(f, g)
    return TruncatedSeries(tuple(_backend.kernels.convolve(f.coeffs, g.coeffs, f.order)))


def derivative(f: TruncatedSeries) -> TruncatedSeries:
    """Formal derivative; the result has order N-1."""
    if f.order == 0:
        raise ValueError("derivative of an order-0 series has no coefficients left")
    return TruncatedSeries(tuple((i + 1) * f[i + 1] for i in range(f.order)))


def _require_unit(f: TruncatedSeries) -> Fraction:
    a0 = f[0]
    if a0 == 0:
        raise NonInvertibleError("constant term is zero; the series is not invertible")
    return a0


def inverse_recursive(f: TruncatedSeries) -> TruncatedSeries:
    a0 = _require_unit(f)
    inv0 = 1 / a0
    g = [inv0]
    for n in range(1, f.order + 1):
        s = Fraction(0)
        for i in range(1, n + 1):
            if f[i]:
                s += f[i] * g[n - i]
        g.append(-inv0 * s)
    return TruncatedSeries(tuple(g))


def inverse_wronski(f: TruncatedSeries) -> TruncatedSeries:
    """Inverse via b_n = (-1)^n det(TH_n(a_0..a_n)) / a_0^(n+1)."""
    a0 = _require_unit(f)
    dets = det_prefixes(HessenbergSpec(f.coeffs, f.order))
    out = []
    scale = 1 / a0
    for n, d in enumerate(dets):
        out.append(scale * d if n % 2 == 0 else -scale * d)
        scale /= a0
    return TruncatedSeries(tuple(out))


# --- delta polynomials, shared by the partition-sum algorithms -------------

@functools.lru_cache(maxsize=256)
def _delta_rows(tail: Tuple[Fraction, ...]) -> Tuple[Tuple[Tuple[Fraction, ...], ...], int]:
    """Partition sums c^(n) for n = 0..len(tail); ``tail`` is (a_1, ..., a_N)."""
    a = [Fraction(0)] + list(tail)
    rows = []
    leaves = 0
    for n in range(len(tail) + 1):
        c, count = _backend.kernels.partition_sums(a, n)
        rows.append(tuple(c))
        leaves += count if n else 0
    return tuple(rows), leaves


def clear_caches() -> None:
    _delta_rows.cache_clear()


def delta_rows(f: TruncatedSeries) -> List[DeltaPolynomial]:
    """delta(-X, a_1..a_n) for every n = 0..N of ``f``."""
    rows, _ = _delta_rows(f.coeffs[1:])
    return [DeltaPolynomial(c, n) for n, c in enumerate(rows)]


def bracket_eval(p: DeltaPolynomial, k: int, r: int, a0: RationalLike) -> Fraction:
    """Apply the map X^i -> binom(k, r-i) X^(k-(r-i)) to ``p`` and evaluate at a0.

    For k >= 0 a term with r-i >= k takes the value delta(k, r-i), which is
    what makes a zero constant term admissible. Negative k needs a0 != 0.
    """
    a0 = to_fraction(a0)
    if k < 0 and a0 == 0:
        raise NonInvertibleError("negative power of a series with zero constant term")
    total = Fraction(0)
    deg = p.degree
    for l, c in enumerate(p.coeffs_by_parts):
        if not c:
            continue
        shift = r - (deg - l)
        if shift < 0:
            continue
        if k >= 0 and shift >= k:
            if shift == k:
                total += c
            continue
        total += binomial(k, shift) * c * a0 ** (k - shift)
    return total


def _closed_form(f: TruncatedSeries, k: int) -> Tuple[TruncatedSeries, int]:
    if k < 0:
        _require_unit(f)
    rows, leaves = _delta_rows(f.coeffs[1:])
    a0 = f[0]
    out = [bracket_eval(DeltaPolynomial(c, n), k, n, a0) for n, c in enumerate(rows)]
    return TruncatedSeries(tuple(out)), leaves


def pow_closed_form(f: TruncatedSeries, k: int) -> TruncatedSeries:
    return _closed_form(f, k)[0]


def _require_nonnegative(k: int, name: str) -> None:
    if k < 0:
        raise ValueError(f"{name} is only defined for k >= 0")


def _double_sum(f: TruncatedSeries, k: int) -> Tuple[TruncatedSeries, int]:
    _require_nonnegative(k, "pow_double_sum")
    rows, leaves = _delta_rows(f.coeffs[1:])
    a0 = f[0]
    out = [a0 ** k]
    for n in range(1, f.order + 1):
        c = rows[n]
        s = Fraction(0)
        for p in range(1, min(n, k) + 1):
            if c[p]:
                s += a0 ** (k - p) * binomial(k, p) * c[p]
        out.append(s)
    return TruncatedSeries(tuple(out)), leaves


def pow_double_sum(f: TruncatedSeries, k: int) -> TruncatedSeries:
    return _double_sum(f, k)[0]


def hat_sequence(f: TruncatedSeries, k: int) -> List[Fraction]:
    """The auxiliary sequence a-hat^(k)_0..a-hat^(k)_N (k >= 1)."""
    return _hat_sequence(f, k)[0]


def _hat_sequence(f: TruncatedSeries, k: int) -> Tuple[List[Fraction], int]:
    rows, leaves = _delta_rows(f.coeffs[1:])
    a0 = f[0]
    hat = [a0 ** (k - 1) * k]
    for n in range(1, f.order + 1):
        c = rows[n]
        s = Fraction(0)
        # binom(k, p+1) vanishes once p + 1 > k
        for p in range(1, min(n, k - 1) + 1):
            if c[p]:
                s += a0 ** (k - p - 1) * binomial(k, p + 1) * c[p]
        hat.append(s)
    return hat, leaves


def _hat(f: TruncatedSeries, k: int) -> Tuple[TruncatedSeries, int]:
    _require_nonnegative(k, "pow_hat")
    if k == 0:
        return TruncatedSeries.one(f.order), 0
    hat, leaves = _hat_sequence(f, k)
    out = [f[0] ** k]
    for n in range(f.order):
        s = Fraction(0)
        for i in range(n + 1):
            if f[i + 1]:
                s += f[i + 1] * hat[n - i]
        out.append(s)
    return TruncatedSeries(tuple(out)), leaves


def pow_hat(f: TruncatedSeries, k: int) -> TruncatedSeries:
    return _hat(f, k)[0]


def _nested(f: TruncatedSeries, k: int) -> Tuple[TruncatedSeries, int]:
    _require_nonnegative(k, "pow_nested")
    N = f.order
    a = f.coeffs
    a0 = a[0]
    steps = 0
    a0_pows = [a0 ** e for e in range(k + 1)]
    # table[j][m] holds the m-th coefficient of S^j, filled row by row
    table = [[Fraction(1)] + [Fraction(0)] * N]
    for j in range(1, k + 1):
        # inner[m] = sum_{l=1}^{j-1} a0^(l-1) table[j-l][m]
        inner = [Fraction(0)] * (N + 1)
        for m in range(N + 1):
            s = Fraction(0)
            for l in range(1, j):
                if table[j - l][m]:
                    s += a0_pows[l - 1] * table[j - l][m]
                steps += 1
            inner[m] = s
        row = [a0_pows[j]]
        for n in range(N):
            s = a[n + 1] * a0_pows[j - 1] * j
            for i in range(1, n + 1):
                if a[i]:
                    s += a[i] * inner[n + 1 - i]
                steps += 1
            row.append(s)
        table.append(row)
    return TruncatedSeries(tuple(table[k])), steps


def pow_nested(f: TruncatedSeries, k: int) -> TruncatedSeries:
    return _nested(f, k)[0]


def _derivative_power(f: TruncatedSeries, k: int) -> Tuple[TruncatedSeries, int]:
    if k < 0:
        g = inverse_wronski(f)
        return _derivative_power(g, -k)
    N = f.order
    a = f.coeffs
    steps = 0
    row = [Fraction(1)] + [Fraction(0)] * N
    for j in range(1, k + 1):
        new = [a[0] ** j]
        for n in range(1, N + 1):
            s = Fraction(0)
            for i in range(1, n + 1):
                if a[i]:
                    s += i * a[i] * row[n - i]
                steps += 1
            new.append(j * s / n)
        row = new
    return TruncatedSeries(tuple(row)), steps


def pow_derivative(f: TruncatedSeries, k: int) -> TruncatedSeries:
    return _derivative_power(f, k)[0]


def _miller(f: TruncatedSeries, k: int) -> Tuple[TruncatedSeries, int]:
    N = f.order
    if f[0] != 0:
        coeffs = _backend.kernels.miller_power(f.coeffs, k, N)
        return TruncatedSeries(tuple(coeffs)), N * (N + 1) // 2
    if k < 0:
        raise NonInvertibleError("negative power of a series with zero constant term")
    if k == 0:
        return TruncatedSeries.one(N), 0
    v = f.valuation()
    if v is None or v * k > N:
        return TruncatedSeries.zero(N), 0
    # f = X^v g with g known to order N - v; only N - v*k terms of g^k are needed
    m = N - v * k
    g = f.coeffs[v : v + m + 1]
    coeffs = _backend.kernels.miller_power(g, k, m)
    return TruncatedSeries.from_coeffs([0] * (v * k) + list(coeffs), N), m * (m + 1) // 2


def pow_miller(f: TruncatedSeries, k: int) -> TruncatedSeries:
    return _miller(f, k)[0]


_IMPLS = {
    PowerAlgorithm.MILLER: _miller,
    PowerAlgorithm.CLOSED_FORM: _closed_form,
    PowerAlgorithm.DOUBLE_SUM: _double_sum,
    PowerAlgorithm.HAT: _hat,
    PowerAlgorithm.NESTED: _nested,
    PowerAlgorithm.DERIVATIVE: _derivative_power,
}


def power(f: TruncatedSeries, k: int, algorithm: PowerAlgorithm | str = PowerAlgorithm.MILLER) -> TruncatedSeries:
    return power_with_count(f, k, algorithm)[0]


def power_with_count(f: TruncatedSeries, k: int, algorithm: PowerAlgorithm | str) -> Tuple[TruncatedSeries, int]:
    """``(S**k, term_count)``; term_count counts partitions or recurrence steps."""
    alg = PowerAlgorithm(algorithm)
    return _IMPLS[alg](f, k)


def applicable_algorithms(k: int) -> List[PowerAlgorithm]:
    return [alg for alg in PowerAlgorithm if k >= 0 or alg.negative_k]


def geometric_inverse_closed(a: Sequence[RationalLike], N: int) -> TruncatedSeries:
    """(1 - a_1 X - ... - a_k X^k)^(-1) to order N by the multinomial formula."""
    if N < 0:
        raise ValueError("N must be >= 0")
    entries = [Fraction(0)] + [to_fraction(x) for x in a[:N]]
    entries += [Fraction(0)] * (N + 1 - len(entries))
    out = [Fraction(1)]
    for n in range(1, N + 1):
        c, _ = _backend.kernels.partition_sums(entries, n)
        out.append(sum(c, Fraction(0)))
    return TruncatedSeries(tuple(out))


def verify_binomial_transform(f: TruncatedSeries, k: int, n: int) -> IdentityReport:
    """Check both binomial-transform expressions of b_n^(k) for f with f_0 = 1."""
    if f[0] != 1:
        raise ValueError("binomial transform identity needs constant term 1")
    if not 0 <= n <= f.order:
        raise ValueError(f"n must lie in 0..{f.order}")
    g = f.truncate(n)
    b = {j: pow_miller(g, j)[n] for j in range(n + 1)}
    bk = pow_miller(g, k)[n]
    rhs1 = sum((binomial(k, j) * binomial(n - k, n - j) * b[j] for j in range(n + 1)), Fraction(0))
    rhs2 = sum(
        (binomial(n + k, n + j) * binomial(n + j, n) * binomial(n - k, n - j) * b[j] for j in range(n + 1)),
        Fraction(0),
    )
    return IdentityReport(
        "binomial_transform",
        {"series": f.to_json()["coeffs"], "k": k, "n": n},
        (bk, binomial(n + k, n) * bk),
        (rhs1, rhs2),
    )


def verify_negative_binomial_corollary(k: int, n: int) -> IdentityReport:
    """binom(n+k-1, n) as a signed multinomial sum over partitions with parts <= k."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if n < 0:
        raise ValueError("n must be >= 0")
    entries = [Fraction(0)] + [Fraction(binomial(k, j)) if j <= k else Fraction(0) for j in range(1, n + 1)]
    c, _ = _backend.kernels.partition_sums(entries, n)
    rhs = sum((c[p] if (n - p) % 2 == 0 else -c[p] for p in range(n + 1)), Fraction(0))
    return IdentityReport("negative_binomial_corollary", {"k": k, "n": n}, Fraction(binomial(n + k - 1, n)), rhs)
