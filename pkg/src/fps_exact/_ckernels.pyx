# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``; same functions, same results.

Coefficients stay Python objects (Fractions); the gain comes from C-level
loop control, C arrays for partition bookkeeping and avoiding Python frames
in the partition DFS.
"""
import math
from fractions import Fraction

from libc.stdlib cimport malloc, free

BACKEND_NAME = "compiled"


cdef class _PartitionIter:
    cdef int n
    cdef int length
    cdef int started
    cdef int done
    cdef int *parts
    cdef int *mult

    def __cinit__(self, int n):
        self.n = n
        self.parts = <int *> malloc((n + 1) * sizeof(int))
        self.mult = <int *> malloc((n + 1) * sizeof(int))
        if self.parts == NULL or self.mult == NULL:
            raise MemoryError()
        cdef int i
        for i in range(n + 1):
            self.mult[i] = 0
            self.parts[i] = 0
        self.started = 0
        self.done = 0
        self.length = 0

    def __dealloc__(self):
        free(self.parts)
        free(self.mult)

    def __iter__(self):
        return self

    cdef tuple _snapshot(self):
        cdef int i
        cdef list out = [0] * self.n
        for i in range(1, self.n + 1):
            out[i - 1] = self.mult[i]
        return tuple(out)

    def __next__(self):
        cdef int j, v, r, i
        if self.done:
            raise StopIteration
        if self.n == 0:
            self.done = 1
            return ()
        if not self.started:
            self.started = 1
            self.parts[0] = self.n
            self.length = 1
            self.mult[self.n] = 1
            return self._snapshot()
        # rightmost part greater than one
        j = self.length - 1
        while j >= 0 and self.parts[j] == 1:
            j -= 1
        if j < 0:
            self.done = 1
            raise StopIteration
        v = self.parts[j]
        r = self.length - 1 - j  # trailing ones
        self.mult[1] -= r
        self.mult[v] -= 1
        v -= 1
        r += 1
        self.parts[j] = v
        self.mult[v] += 1
        i = j + 1
        while r >= v:
            self.parts[i] = v
            self.mult[v] += 1
            r -= v
            i += 1
        if r > 0:
            self.parts[i] = r
            self.mult[r] += 1
            i += 1
        self.length = i
        return self._snapshot()


def weighted_partitions(n):
    if n < 0:
        raise ValueError("n must be >= 0")
    return _PartitionIter(n)


cdef Py_ssize_t _dfs(list pw, list binom, list acc, Py_ssize_t part,
                     Py_ssize_t remaining, Py_ssize_t nparts, object w):
    cdef Py_ssize_t m, total, leaves = 0
    cdef object row
    while True:
        if remaining == 0:
            acc[nparts] = acc[nparts] + w
            return leaves + 1
        if part == 1:
            row = pw[1]
            if row is not None:
                total = nparts + remaining
                acc[total] = acc[total] + w * (<list> row)[remaining] * (<list> binom[total])[remaining]
                leaves += 1
            return leaves
        row = pw[part]
        if row is not None:
            m = remaining // part
            while m > 0:
                leaves += _dfs(pw, binom, acc, part - 1, remaining - m * part, nparts + m,
                               w * (<list> row)[m] * (<list> binom[nparts + m])[m])
                m -= 1
        # multiplicity zero for this part
        part -= 1


def partition_sums(a, Py_ssize_t n):
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return [Fraction(1)], 1
    cdef Py_ssize_t i, m, t, l, leaves
    cdef object q = 1, p
    cdef list row
    cdef list pw = [None] * (n + 1)
    cdef list acc = [0] * (n + 1)
    for i in range(1, n + 1):
        if a[i]:
            q = math.lcm(q, Fraction(a[i]).denominator)
    for i in range(1, n + 1):
        if a[i]:
            p = int(Fraction(a[i]) * q)
            row = [1]
            for m in range(n // i):
                row.append(row[m] * p)
            pw[i] = row
    cdef list binom = [[math.comb(t, m) for m in range(t + 1)] for t in range(n + 1)]
    leaves = _dfs(pw, binom, acc, n, n, 0, 1)
    return [Fraction(acc[l], q ** l) for l in range(n + 1)], leaves


def convolve(f, g, Py_ssize_t n):
    cdef list out = []
    cdef Py_ssize_t m, i
    cdef object s, fi
    for m in range(n + 1):
        s = 0
        for i in range(m + 1):
            fi = f[i]
            if fi:
                s = s + fi * g[m - i]
        out.append(Fraction(s))
    return out


def miller_power(a, k, Py_ssize_t n):
    a0 = Fraction(a[0])
    if a0 == 0:
        raise ZeroDivisionError("miller_power needs a nonzero constant term")
    cdef list out = [a0 ** k]
    cdef Py_ssize_t m, i
    cdef object s, ai
    for m in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, m + 1):
            ai = a[i]
            if ai:
                s = s + (i * k - m + i) * ai * out[m - i]
        out.append(s / (m * a0))
    return out


def hessenberg_dets(band):
    cdef Py_ssize_t n = len(band) - 1
    cdef list dets = [Fraction(1)]
    cdef list signed = [Fraction(1)]
    cdef Py_ssize_t m, i
    cdef object s, ai
    a0 = band[0]
    for i in range(1, n):
        signed.append(signed[i - 1] * -a0)
    for m in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, m + 1):
            ai = band[i]
            if ai:
                s = s + signed[i - 1] * ai * dets[m - i]
        dets.append(s)
    return dets
