"""Exact rational helpers: parsing, canonical rendering, factorials, binomials.

All coefficients in the package are :class:`fractions.Fraction` values.
"""
from __future__ import annotations

import math
import re
import threading
from fractions import Fraction
from typing import Iterable, List, Union

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")

_fact_table: List[int] = [1]
_fact_lock = threading.Lock()


def to_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (decimal integers only, q > 0)."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not an exact rational literal: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_rational_list(text: str) -> List[Fraction]:
    """Parse a comma separated list such as ``"1,-1/2,1/6"``."""
    parts = [p for p in text.split(",")]
    if any(not p.strip() for p in parts):
        raise ValueError(f"empty entry in rational list {text!r}")
    return [parse_rational(p) for p in parts]


def format_rational(value: RationalLike) -> str:
    """Canonical rendering: lowest terms, sign on the numerator, ``/1`` omitted."""
    q = to_fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_rationals(values: Iterable[RationalLike]) -> List[str]:
    return [format_rational(v) for v in values]


def factorial(n: int) -> int:
    """n! from a shared table grown on demand.

    Existing entries are never rewritten, so readers need no lock.
    """
    if n < 0:
        raise ValueError("factorial of a negative integer")
    table = _fact_table
    if n < len(table):
        return table[n]
    with _fact_lock:
        while len(table) <= n:
            table.append(table[-1] * len(table))
    return table[n]


def falling(x: int, m: int) -> int:
    """Falling factorial x(x-1)...(x-m+1); 1 for m = 0."""
    out = 1
    for j in range(m):
        out *= x - j
    return out


def binomial(x: int, m: int) -> int:
    """Binomial coefficient valid for any integer upper index.

    Uses the falling-factorial definition, so ``binomial(-3, 2) == 6`` and
    ``binomial(2, 5) == 0``. Returns 0 for negative ``m``.
    """
    if m < 0:
        return 0
    if x >= 0:
        return math.comb(x, m)
    # upper negation: C(x, m) = (-1)^m C(m - x - 1, m)
    c = math.comb(m - x - 1, m)
    return -c if m & 1 else c


def multinomial(parts: Iterable[int]) -> int:
    total = 0
    denom = 1
    for k in parts:
        total += k
        denom *= factorial(k)
    return factorial(total) // denom
