"""Registry of exact identities among Bernoulli, generalized Bernoulli and
Stirling numbers.

Each checker returns an :class:`IdentityReport` whose ``lhs``/``rhs`` are
tuples with one entry per displayed equation. Two displayed formulas carry
an upper index that does not match the relations they are derived from
(``B^(-k-l)`` and ``B^(-k-1)``). Those are evaluated exactly as displayed
first; when that disagrees, the report is flagged and the reading derived
from the underlying power-series relation (``B^(-k+l)``, ``B^(-k+1)``) is
what decides ``passed``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .errors import HypothesisViolation, UnknownIdentityError
from .hessenberg import HessenbergSpec, det_recursive
from .numbers import bernoulli as B
from .numbers import gen_bernoulli as G
from .numbers import stirling2
from .rational import binomial, factorial
from .reports import IdentityReport
from . import _backend


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise HypothesisViolation(message)


class _Collector:
    def __init__(self):
        self.lhs: List[Fraction] = []
        self.rhs: List[Fraction] = []
        self.notes: List[str] = []

    def add(self, lhs, rhs):
        self.lhs.append(Fraction(lhs))
        self.rhs.append(Fraction(rhs))

    def add_displayed(self, label: str, lhs, rhs_displayed, rhs_derived, derived_reading: str):
        lhs = Fraction(lhs)
        if lhs == rhs_displayed:
            self.add(lhs, rhs_displayed)
            return
        self.notes.append(
            f"{label}: displayed form gives {rhs_displayed} but lhs is {lhs}; "
            f"checked {derived_reading} instead"
        )
        self.add(lhs, rhs_derived)

    def report(self, identity: str, params: Dict[str, int]) -> IdentityReport:
        return IdentityReport(
            identity,
            params,
            tuple(self.lhs),
            tuple(self.rhs),
            flagged=bool(self.notes),
            note="; ".join(self.notes),
        )


def _multinomial_signed(entries: List[Fraction], n: int, sign: bool) -> Fraction:
    """sum over partitions of n of multinomial(p; k) prod entries[i]^k_i, times (-1)^p if sign."""
    c, _ = _backend.kernels.partition_sums([Fraction(0)] + entries[:n], n)
    total = Fraction(0)
    for p, v in enumerate(c):
        total += -v if (sign and p % 2) else v
    return total


def _th_det(entries: List[Fraction], n: int) -> Fraction:
    return det_recursive(HessenbergSpec(tuple([Fraction(1)] + entries[:n]), n))


def bernoulli_reciprocal(n: int) -> IdentityReport:
    _require(n >= 1, "bernoulli_reciprocal needs n >= 1")
    entries = [B(i) / factorial(i) for i in range(1, n + 1)]
    out = _Collector()
    out.add(Fraction(1, factorial(n + 1)), _multinomial_signed(entries, n, True))
    out.add(Fraction((-1) ** n, factorial(n + 1)), _th_det(entries, n))
    return out.report("bernoulli_reciprocal", {"n": n})


def genb_det_pair(n: int, m: int) -> IdentityReport:
    _require(n >= 1 and m >= 1, "genb_det_pair needs n >= 1 and m >= 1")
    entries = [G(-m, i) / factorial(i) for i in range(1, n + 1)]
    lhs = G(m, n) / factorial(n)
    out = _Collector()
    out.add((-1) ** n * lhs, _th_det(entries, n))
    out.add(lhs, _multinomial_signed(entries, n, True))
    return out.report("genb_det_pair", {"n": n, "m": m})


def genb_stirling_orthogonality(n: int, k: int) -> IdentityReport:
    _require(n >= 1 and k >= 0, "genb_stirling_orthogonality needs n >= 1 and k >= 0")
    out = _Collector()
    out.add(sum(binomial(n + k, n - i) * G(k, n - i) * stirling2(i + k, k) for i in range(n + 1)), 0)
    if k == 1:
        out.add(sum(binomial(n + 1, n - i) * B(n - i) for i in range(n + 1)), 0)
    return out.report("genb_stirling_orthogonality", {"n": n, "k": k})


def genb_neg_is_stirling(n: int, k: int) -> IdentityReport:
    _require(n >= 0 and k >= 0, "genb_neg_is_stirling needs n >= 0 and k >= 0")
    out = _Collector()
    out.add(binomial(n + k, k) * G(-k, n), stirling2(n + k, k))
    if n >= 1:
        out.add(
            sum(
                binomial(n + k, n - i) * binomial(i + k, i) * G(k, n - i) * G(-k, i)
                for i in range(n + 1)
            ),
            0,
        )
    return out.report("genb_neg_is_stirling", {"n": n, "k": k})


def genb_split_recurrences(n: int, k: int) -> IdentityReport:
    _require(n >= 1 and k >= 1, "genb_split_recurrences needs n >= 1 and k >= 1")
    out = _Collector()
    rhs = k * B(n) + sum(
        binomial(n, i) * B(i) * sum(G(k - l, n - i) for l in range(1, k)) for i in range(1, n)
    )
    out.add(G(k, n), rhs)

    def negative(step: int) -> Fraction:
        return Fraction(k, n + 1) + sum(
            Fraction(binomial(n, i), i + 1) * sum(G(-k + step * l, n - i) for l in range(1, k))
            for i in range(1, n)
        )

    out.add_displayed("negative-order recurrence", G(-k, n), negative(-1), negative(+1), "B^(-k+l)")
    return out.report("genb_split_recurrences", {"n": n, "k": k})


def genb_binomial_transform(n: int, k: int) -> IdentityReport:
    _require(n >= 0, "genb_binomial_transform needs n >= 0")
    out = _Collector()
    b = [G(j, n) for j in range(n + 1)]
    out.add(G(k, n), sum(binomial(k, j) * binomial(n - k, n - j) * b[j] for j in range(n + 1)))
    out.add(
        binomial(n + k, n) * G(k, n),
        sum(
            binomial(n + k, n + j) * binomial(n + j, n) * binomial(n - k, n - j) * b[j]
            for j in range(n + 1)
        ),
    )
    return out.report("genb_binomial_transform", {"n": n, "k": k})


def genb_derivative_recurrence(n: int, k: int) -> IdentityReport:
    _require(n >= 0, "genb_derivative_recurrence needs n >= 0")
    out = _Collector()
    out.add(G(k, n + 1), k * sum(binomial(n, i) * B(i + 1) * G(k - 1, n - i) for i in range(n + 1)))

    def negative(step: int) -> Fraction:
        return k * sum(Fraction(binomial(n, i), i + 2) * G(-k + step, n - i) for i in range(n + 1))

    out.add_displayed("negative-order relation", G(-k, n + 1), negative(-1), negative(+1), "B^(-k+1)")
    return out.report("genb_derivative_recurrence", {"n": n, "k": k})


def genb_euler_recurrence(n: int, k: int) -> IdentityReport:
    _require(n >= 0, "genb_euler_recurrence needs n >= 0")
    out = _Collector()
    weights = [k * binomial(n, i) - binomial(n, i + 1) for i in range(n + 1)]
    out.add(G(k, n + 1), sum(weights[i] * B(i + 1) * G(k, n - i) for i in range(n + 1)))
    out.add(G(-k, n + 1), sum(Fraction(weights[i], i + 2) * G(-k, n - i) for i in range(n + 1)))
    return out.report("genb_euler_recurrence", {"n": n, "k": k})


def genb_ladder(n: int, k: int) -> IdentityReport:
    _require(k != 0, "genb_ladder needs k != 0")
    _require(n >= 1, "genb_ladder needs n >= 1")
    out = _Collector()
    out.add(G(k + 1, n), (1 - Fraction(n, k)) * G(k, n) - n * G(k, n - 1))
    return out.report("genb_ladder", {"n": n, "k": k})


def euler_classic(n: int) -> IdentityReport:
    _require(n >= 0, "euler_classic needs n >= 0")
    out = _Collector()
    prev = n * B(n - 1) if n >= 1 else 0
    out.add(sum(binomial(n, i) * B(i) * B(n - i) for i in range(n + 1)), (1 - n) * B(n) - prev)
    if n >= 4:
        out.add(sum(binomial(n, i) * B(i) * B(n - i) for i in range(2, n - 1)), -(n + 1) * B(n))
    return out.report("euler_classic", {"n": n})


def euler_generalized(n: int, k: int) -> IdentityReport:
    _require(k != 0, "euler_generalized needs k != 0")
    _require(n >= 0, "euler_generalized needs n >= 0")
    out = _Collector()
    prev = n * G(k, n - 1) if n >= 1 else 0
    out.add(
        sum(binomial(n, i) * B(i) * G(k, n - i) for i in range(n + 1)),
        (1 - Fraction(n, k)) * G(k, n) - prev,
    )
    if n >= 4:
        out.add(
            sum(binomial(n, i) * B(i) * G(k, n - i) for i in range(2, n - 1)),
            -Fraction(n, k) * G(k, n) - Fraction(n, 2) * G(k, n - 1) + Fraction(k * n, 2) * B(n - 1) - B(n),
        )
    return out.report("euler_generalized", {"n": n, "k": k})


# identity id -> (checker, parameter names)
REGISTRY: Dict[str, Tuple[Callable[..., IdentityReport], Tuple[str, ...]]] = {
    "bernoulli_reciprocal": (bernoulli_reciprocal, ("n",)),
    "genb_det_pair": (genb_det_pair, ("n", "m")),
    "genb_stirling_orthogonality": (genb_stirling_orthogonality, ("n", "k")),
    "genb_neg_is_stirling": (genb_neg_is_stirling, ("n", "k")),
    "genb_split_recurrences": (genb_split_recurrences, ("n", "k")),
    "genb_binomial_transform": (genb_binomial_transform, ("n", "k")),
    "genb_derivative_recurrence": (genb_derivative_recurrence, ("n", "k")),
    "genb_euler_recurrence": (genb_euler_recurrence, ("n", "k")),
    "genb_ladder": (genb_ladder, ("n", "k")),
    "euler_classic": (euler_classic, ("n",)),
    "euler_generalized": (euler_generalized, ("n", "k")),
}


def verify_identity(identity_id: str, **params: int) -> IdentityReport:
    try:
        checker, names = REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(identity_id) from None
    if set(params) != set(names):
        raise HypothesisViolation(f"{identity_id} takes parameters {', '.join(names)}; got {', '.join(sorted(params))}")
    return checker(**params)


def parameter_grid(identity_id: str, max_n: int, k_lo: int, k_hi: int) -> List[Dict[str, int]]:
    """Every admissible parameter point with n <= max_n and k (or m) in [k_lo, k_hi]."""
    _, names = REGISTRY[identity_id]
    if identity_id in ("euler_classic", "bernoulli_reciprocal"):
        lo = 1 if identity_id == "bernoulli_reciprocal" else 0
        return [{"n": n} for n in range(lo, max_n + 1)]
    n_lo = {
        "genb_det_pair": 1,
        "genb_stirling_orthogonality": 1,
        "genb_split_recurrences": 1,
        "genb_ladder": 1,
    }.get(identity_id, 0)
    k_min = {
        "genb_det_pair": 1,
        "genb_split_recurrences": 1,
        "genb_stirling_orthogonality": 0,
        "genb_neg_is_stirling": 0,
    }.get(identity_id)
    ks = [k for k in range(k_lo, k_hi + 1) if (k_min is None or k >= k_min)]
    if identity_id in ("genb_ladder", "euler_generalized"):
        ks = [k for k in ks if k != 0]
    second = names[1]
    return [{"n": n, second: k} for k in ks for n in range(n_lo, max_n + 1)]
