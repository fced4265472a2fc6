"""Pure-Python hot kernels.

This module and the compiled ``_ckernels`` extension expose the same five
functions with identical results; ``fps_exact._backend`` picks one at import.
Coefficient sequences are plain lists of Fractions (or ints).
"""
from __future__ import annotations

import math
from fractions import Fraction

BACKEND_NAME = "python"


def weighted_partitions(n):
    """Yield multiplicity tuples ``(k_1, ..., k_n)`` with ``sum(i*k_i) == n``.

    Order: partitions as non-increasing part lists in reverse lexicographic
    order, i.e. ``(n)``, ``(n-1, 1)``, ``(n-2, 2)``, ``(n-2, 1, 1)``, ...
    For ``n == 0`` the single empty partition ``()`` is produced.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield ()
        return
    mult = [0] * (n + 1)

    def rec(remaining, largest):
        if remaining == 0:
            yield tuple(mult[1:])
            return
        for part in range(min(remaining, largest), 0, -1):
            mult[part] += 1
            yield from rec(remaining - part, part)
            mult[part] -= 1

    yield from rec(n, n)


def partition_sums(a, n):
    """Bucketed multinomial sums over weighted partitions of ``n``.

    Returns ``(c, leaves)`` where ``c[l]`` is the sum, over partitions of
    ``n`` with ``l`` parts, of ``l! * prod(a[i]**k_i / k_i!)``, and ``leaves``
    is the number of partitions visited. ``a[0]`` is ignored; parts whose
    coefficient is zero are skipped.

    With q the common denominator of a_1..a_n and p_i = q*a_i, every term in
    bucket l is an integer over q**l, so the walk runs on integers only.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return [Fraction(1)], 1
    q = 1
    for i in range(1, n + 1):
        if a[i]:
            q = math.lcm(q, Fraction(a[i]).denominator)
    # pw[i][m] = p_i^m
    pw = [None] * (n + 1)
    for i in range(1, n + 1):
        if a[i]:
            p = int(Fraction(a[i]) * q)
            row = [1]
            for _ in range(n // i):
                row.append(row[-1] * p)
            pw[i] = row
    binom = [[math.comb(t, m) for m in range(t + 1)] for t in range(n + 1)]
    acc = [0] * (n + 1)
    leaves = 0

    def dfs(part, remaining, nparts, w):
        # w = multinomial(nparts; chosen multiplicities) * prod p_i^k_i
        nonlocal leaves
        if remaining == 0:
            acc[nparts] += w
            leaves += 1
            return
        if part == 1:
            row = pw[1]
            if row is not None:
                total = nparts + remaining
                acc[total] += w * row[remaining] * binom[total][remaining]
                leaves += 1
            return
        row = pw[part]
        if row is not None:
            for m in range(remaining // part, 0, -1):
                dfs(part - 1, remaining - m * part, nparts + m,
                    w * row[m] * binom[nparts + m][m])
        dfs(part - 1, remaining, nparts, w)

    dfs(n, n, 0, 1)
    return [Fraction(acc[l], q ** l) for l in range(n + 1)], leaves


def convolve(f, g, n):
    """Cauchy product coefficients 0..n."""
    out = []
    for m in range(n + 1):
        s = 0
        for i in range(m + 1):
            fi = f[i]
            if fi:
                s += fi * g[m - i]
        out.append(Fraction(s))
    return out


def miller_power(a, k, n):
    """Coefficients 0..n of ``S**k`` by the O(n^2) power recurrence; a[0] != 0."""
    a0 = Fraction(a[0])
    if a0 == 0:
        raise ZeroDivisionError("miller_power needs a nonzero constant term")
    out = [a0 ** k]
    for m in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, m + 1):
            ai = a[i]
            if ai:
                s += (i * k - m + i) * ai * out[m - i]
        out.append(s / (m * a0))
    return out


def hessenberg_dets(band):
    """``[det(TH_0), ..., det(TH_n)]`` for band ``(a_0, ..., a_n)``."""
    n = len(band) - 1
    dets = [Fraction(1)]
    a0 = band[0]
    # powers (-a_0)^(i-1)
    signed = [Fraction(1)]
    for _ in range(1, n):
        signed.append(signed[-1] * -a0)
    for m in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, m + 1):
            ai = band[i]
            if ai:
                s += signed[i - 1] * ai * dets[m - i]
        dets.append(s)
    return dets
