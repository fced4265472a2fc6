"""Both kernel backends must return identical results."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fps_exact import _backend, _kernels_py
from fps_exact.rational import factorial

from oracles import partition_counts

BACKENDS = ["python"] + (["compiled"] if _backend.compiled_available() else [])

small_fractions = st.fractions(min_value=-9, max_value=9, max_denominator=9)


@pytest.fixture(params=BACKENDS)
def kern(request):
    return _backend.get_kernels(request.param)


def test_backend_names():
    assert _kernels_py.BACKEND_NAME == "python"
    assert _backend.active_backend() in ("python", "compiled")
    with pytest.raises(ValueError):
        _backend.get_kernels("gpu")


def test_use_backend_restores():
    before = _backend.active_backend()
    with _backend.use_backend("python") as k:
        assert k.BACKEND_NAME == "python"
        assert _backend.active_backend() == "python"
    assert _backend.active_backend() == before


@pytest.mark.parametrize("n", range(0, 16))
def test_weighted_partitions_count_and_weight(kern, n):
    parts = list(kern.weighted_partitions(n))
    assert len(parts) == partition_counts(n)[n]
    assert len(set(map(tuple, parts))) == len(parts)
    for mult in parts:
        assert sum(i * k for i, k in enumerate(mult, start=1)) == n


def test_weighted_partition_order(kern):
    assert [tuple(m) for m in kern.weighted_partitions(3)] == [(0, 0, 1), (1, 1, 0), (3, 0, 0)]
    assert [tuple(m) for m in kern.weighted_partitions(0)] == [()]


def _partition_sums_oracle(a, n):
    c = [Fraction(0)] * (n + 1)
    for mult in _kernels_py.weighted_partitions(n):
        l = sum(mult)
        term = Fraction(factorial(l))
        for i, k in enumerate(mult, start=1):
            term *= a[i] ** k / factorial(k)
        c[l] += term
    return c


@given(st.lists(small_fractions, min_size=1, max_size=11))
def test_partition_sums_backends_agree(a):
    n = len(a) - 1
    ref = _partition_sums_oracle(a, n) if n else [Fraction(1)]
    for name in BACKENDS:
        c, _ = _backend.get_kernels(name).partition_sums(a, n)
        assert list(c) == ref


@given(st.lists(small_fractions, min_size=1, max_size=10), st.lists(small_fractions, min_size=1, max_size=10))
def test_convolve_agree(f, g):
    n = min(len(f), len(g)) - 1
    ref = [sum(f[i] * g[m - i] for i in range(m + 1)) for m in range(n + 1)]
    for name in BACKENDS:
        assert list(_backend.get_kernels(name).convolve(f, g, n)) == ref


@given(st.lists(small_fractions, min_size=1, max_size=10), st.integers(-4, 4))
def test_miller_power_agree(a, k):
    if a[0] == 0:
        for name in BACKENDS:
            with pytest.raises(ZeroDivisionError):
                _backend.get_kernels(name).miller_power(a, k, len(a) - 1)
        return
    results = [list(_backend.get_kernels(name).miller_power(a, k, len(a) - 1)) for name in BACKENDS]
    assert all(r == results[0] for r in results)


@given(st.lists(small_fractions, min_size=1, max_size=9))
def test_hessenberg_dets_agree(band):
    results = [list(_backend.get_kernels(name).hessenberg_dets(band)) for name in BACKENDS]
    assert results[0][0] == 1
    assert all(r == results[0] for r in results)
