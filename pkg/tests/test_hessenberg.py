from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from fps_exact.hessenberg import (
    HessenbergSpec,
    WeightedPartition,
    delta_polynomial,
    det_composition,
    det_prefixes,
    det_recursive,
    det_trudi,
    enumerate_weighted_partitions,
)

from oracles import cofactor_det, compositions, partition_counts

METHODS = [det_recursive, det_trudi, det_composition]
small_fractions = st.fractions(min_value=-9, max_value=9, max_denominator=9)
bands = st.lists(small_fractions, min_size=1, max_size=9)


def test_spec_invariants():
    with pytest.raises(ValueError):
        HessenbergSpec((1, 2), 2)
    with pytest.raises(ValueError):
        HessenbergSpec((), -1)
    with pytest.raises(ValueError):
        HessenbergSpec.from_band([])
    assert HessenbergSpec.from_band([5, 6, 7], order=0).band == (5,)


def test_matrix_layout():
    m = HessenbergSpec.from_band([9, 1, 2, 3]).matrix()
    assert m == [[1, 2, 3], [9, 1, 2], [0, 9, 1]]


@pytest.mark.parametrize("method", METHODS)
@pytest.mark.parametrize(
    "band, expected",
    [((1,), 1), ((1, 3, 5), 4), ((1, 2, 3, 4), 0), ((7, 4), 4), ((5, 6, 7), 1)],
)
def test_examples(method, band, expected):
    order = 0 if band == (5, 6, 7) else len(band) - 1
    assert method(HessenbergSpec.from_band(band, order)) == expected


def test_zero_subdiagonal_leaves_top_term():
    spec = HessenbergSpec.from_band([0, Fraction(2, 3), 5, -1, 8])
    for method in METHODS:
        assert method(spec) == Fraction(2, 3) ** 4


def test_bernoulli_style_band():
    spec = HessenbergSpec.from_band([1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)])
    assert det_trudi(spec) == det_recursive(spec) == cofactor_det(spec.matrix())


@given(bands)
def test_all_methods_match_cofactor(band):
    spec = HessenbergSpec.from_band(band)
    ref = cofactor_det(spec.matrix())
    for method in METHODS:
        assert method(spec) == ref


@given(bands)
def test_prefixes(band):
    spec = HessenbergSpec.from_band(band)
    pref = det_prefixes(spec)
    assert len(pref) == len(band)
    for n, d in enumerate(pref):
        assert d == det_recursive(HessenbergSpec.from_band(band, n))


@given(st.lists(small_fractions, min_size=1, max_size=7))
def test_brioschi_specialization(tail):
    n = len(tail)
    a = [Fraction(1)] + tail
    total = Fraction(0)
    for wp in enumerate_weighted_partitions(n):
        term = Fraction(factorial(wp.parts) * (-1) ** (n - wp.parts))
        for i, k in enumerate(wp.multiplicities, start=1):
            term *= a[i] ** k / factorial(k)
        total += term
    assert total == det_trudi(HessenbergSpec.from_band(a))


def test_composition_oracle_count():
    assert sum(1 for _ in compositions(6)) == 2 ** 5


@pytest.mark.parametrize("n", range(0, 31))
def test_enumeration_count(n):
    items = list(enumerate_weighted_partitions(n))
    assert len(items) == partition_counts(n)[n]
    for wp in items:
        assert wp.weight == n
        assert wp.parts == sum(wp.multiplicities) <= max(n, 0)
        assert sum(i * k for i, k in enumerate(wp.multiplicities, start=1)) == n


def test_enumeration_examples():
    assert [wp.part_list() for wp in enumerate_weighted_partitions(3)] == [(3,), (2, 1), (1, 1, 1)]
    assert [wp.parts for wp in enumerate_weighted_partitions(0)] == [0]
    assert len(list(enumerate_weighted_partitions(10))) == 42
    lists = [wp.part_list() for wp in enumerate_weighted_partitions(8)]
    assert lists == sorted(lists, reverse=True)
    with pytest.raises(ValueError):
        list(enumerate_weighted_partitions(-1))


def test_weighted_partition_from_multiplicities():
    wp = WeightedPartition.from_multiplicities((1, 1, 0))
    assert (wp.weight, wp.parts, wp.part_list()) == (3, 2, (2, 1))


def test_delta_polynomial_examples():
    assert delta_polynomial([], 0).coeffs_by_parts == (1,)
    assert delta_polynomial([7], 1).coeffs_by_parts == (0, 7)
    a1, a2 = Fraction(2, 3), Fraction(-5, 7)
    assert delta_polynomial([a1, a2], 2).coeffs_by_parts == (0, a2, a1 ** 2)
    with pytest.raises(ValueError):
        delta_polynomial([1], 2)


@given(st.lists(small_fractions, min_size=1, max_size=7), small_fractions)
def test_delta_evaluate_is_determinant(a, r):
    n = len(a)
    p = delta_polynomial(a, n)
    assert p.coeffs_by_parts[n] == a[0] ** n
    assert p.evaluate(r) == det_recursive(HessenbergSpec.from_band([-r] + a))


@given(small_fractions, st.integers(1, 7))
def test_delta_symmetric_in_equal_values(x, n):
    p = delta_polynomial([x] * n, n)
    assert p.evaluate(0) == x ** n
