import json
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from fps_exact.errors import NonInvertibleError, OrderMismatchError
from fps_exact.hessenberg import delta_polynomial
from fps_exact.series import (
    PowerAlgorithm,
    TruncatedSeries,
    applicable_algorithms,
    bracket_eval,
    derivative,
    geometric_inverse_closed,
    inverse_recursive,
    inverse_wronski,
    mul,
    pow_closed_form,
    pow_derivative,
    pow_double_sum,
    pow_hat,
    pow_miller,
    pow_nested,
    power,
    power_with_count,
    verify_binomial_transform,
    verify_negative_binomial_corollary,
)
from fps_exact.verify import random_series

from oracles import naive_pow, negative_binomial, partition_counts

S = TruncatedSeries.from_coeffs
ALL_POW = [pow_miller, pow_closed_form, pow_double_sum, pow_hat, pow_nested, pow_derivative]
NEG_POW = [pow_miller, pow_closed_form, pow_derivative]

small_fractions = st.fractions(min_value=-9, max_value=9, max_denominator=9)
unit_fractions = small_fractions.filter(lambda q: q != 0)


@st.composite
def series(draw, max_order=8, unit=True):
    a0 = draw(unit_fractions if unit else small_fractions)
    tail = draw(st.lists(small_fractions, min_size=0, max_size=max_order))
    return S([a0] + tail)


# --- construction and serialization -------------------------------------


def test_from_coeffs_pads_and_cuts():
    assert S([1, 2], 3).coeffs == (1, 2, 0, 0)
    assert S([1, 2, 3], 1).coeffs == (1, 2)
    with pytest.raises(ValueError):
        TruncatedSeries(())


def test_json_roundtrip():
    f = S([1, F(-1, 2), F(1, 6)])
    text = json.dumps(f.to_json())
    assert f.to_json() == {"order": 2, "coeffs": ["1", "-1/2", "1/6"]}
    assert TruncatedSeries.from_json(text) == f


@pytest.mark.parametrize(
    "obj",
    [
        {"order": 2, "coeffs": ["1", "2"]},
        {"order": 1, "coeffs": [1, 2]},
        {"order": -1, "coeffs": []},
        {"order": 0, "coeffs": ["1"], "extra": 1},
        ["1", "2"],
        {"order": 0, "coeffs": ["1.5"]},
    ],
)
def test_json_rejects(obj):
    with pytest.raises(ValueError):
        TruncatedSeries.from_json(obj)


def test_order_mismatch_is_an_error():
    with pytest.raises(OrderMismatchError):
        mul(S([1, 1]), S([1, 1, 1]))
    with pytest.raises(OrderMismatchError):
        S([1, 1]) == S([1, 1, 0])
    with pytest.raises(OrderMismatchError):
        S([1]) + S([1, 2])


def test_trailing_zeros_kept():
    assert S([1, 0, 0]).order == 2


# --- multiplication and derivative ---------------------------------------


def test_mul_examples():
    assert mul(S([1, 1, 0]), S([1, -1, 0])).coeffs == (1, 0, -1)
    assert mul(S([1, 1, 1]), S([1, 1, 1])).coeffs == (1, 2, 3)
    f = S([F(2, 3), 5, -1])
    assert f * TruncatedSeries.one(2) == f
    assert (f * 3).coeffs == (2, 15, -3)


def test_derivative_examples():
    assert derivative(S([1, 1, 1])).coeffs == (1, 2)
    assert derivative(S([7], 4)).coeffs == (0, 0, 0, 0)
    assert derivative(S([1, F(1, 2), F(1, 6), F(1, 24)])).coeffs == (F(1, 2), F(1, 3), F(1, 8))
    with pytest.raises(ValueError):
        derivative(S([1]))


@given(series(unit=False), st.data())
def test_leibniz_rule(f, data):
    if f.order == 0:
        return
    g = S(data.draw(st.lists(small_fractions, min_size=f.order + 1, max_size=f.order + 1)))
    lhs = derivative(mul(f, g))
    df, dg = derivative(f), derivative(g)
    rhs = mul(df, g.truncate(f.order - 1)) + mul(f.truncate(f.order - 1), dg)
    assert lhs == rhs


@given(series(), st.integers(-4, 4))
def test_chain_rule(f, k):
    if f.order == 0:
        return
    lhs = derivative(power(f, k))
    rhs = mul(derivative(f), power(f, k - 1).truncate(f.order - 1)).scale(k)
    assert lhs == rhs


# --- inverses ------------------------------------------------------------


@pytest.mark.parametrize("inv", [inverse_recursive, inverse_wronski])
@pytest.mark.parametrize(
    "coeffs, expected",
    [
        ([1, 1, 0, 0], (1, -1, 1, -1)),
        ([2, 1, 0], (F(1, 2), F(-1, 4), F(1, 8))),
        ([1, F(1, 2), F(1, 6), F(1, 24)], (1, F(-1, 2), F(1, 12), 0)),
    ],
)
def test_inverse_examples(inv, coeffs, expected):
    assert inv(S(coeffs)).coeffs == expected


@given(unit_fractions, small_fractions, small_fractions)
def test_wronski_low_coefficients(a0, a1, a2):
    g = inverse_wronski(S([a0, a1, a2]))
    assert g[1] == -a1 / a0 ** 2
    assert g[2] == (a1 ** 2 - a0 * a2) / a0 ** 3


@pytest.mark.parametrize("inv", [inverse_recursive, inverse_wronski])
def test_inverse_requires_unit(inv):
    with pytest.raises(NonInvertibleError):
        inv(S([0, 1, 2]))


@given(series())
def test_inverse_laws(f):
    w = inverse_wronski(f)
    assert w == inverse_recursive(f)
    assert mul(f, w) == TruncatedSeries.one(f.order)
    for k in range(1, 4):
        assert power(f, -k) == power(w, k)


# --- powers --------------------------------------------------------------


@pytest.mark.parametrize("alg", ALL_POW)
@pytest.mark.parametrize(
    "coeffs, k, expected",
    [
        ([1, 1, 0, 0], 2, (1, 2, 1, 0)),
        ([1, 1, F(1, 2)], 3, (1, 3, F(9, 2))),
        ([2, 1, 0], 1, (2, 1, 0)),
        ([F(3, 4), 5, -2], 0, (1, 0, 0)),
    ],
)
def test_power_examples(alg, coeffs, k, expected):
    assert alg(S(coeffs), k).coeffs == expected


@pytest.mark.parametrize("alg", NEG_POW)
def test_negative_power_examples(alg):
    assert alg(S([2, 1, 0]), -1).coeffs == (F(1, 2), F(-1, 4), F(1, 8))
    assert alg(S([1, -1, 0]), -3).coeffs == (1, 3, 6)


@pytest.mark.parametrize("alg", [pow_double_sum, pow_hat, pow_nested])
def test_nonnegative_only(alg):
    with pytest.raises(ValueError):
        alg(S([1, 1]), -1)


@pytest.mark.parametrize("alg", NEG_POW)
def test_negative_power_needs_unit(alg):
    with pytest.raises(NonInvertibleError):
        alg(S([0, 1, 1]), -2)


@pytest.mark.parametrize("alg", ALL_POW)
def test_monomial_power_zero_constant(alg):
    out = alg(S([0, 1], 6), 5)
    assert out.coeffs == (0, 0, 0, 0, 0, 1, 0)


@pytest.mark.parametrize("alg", ALL_POW)
def test_zero_constant_with_shift(alg):
    f = S([0, 0, 2, 1, 0, 0, 0])
    assert alg(f, 2).coeffs == tuple(naive_pow(f.coeffs, 2, 6))
    assert alg(f, 4).coeffs == (0,) * 7
    assert alg(S([0, 0, 0]), 0).coeffs == (1, 0, 0)
    assert alg(S([0, 0, 0]), 3).coeffs == (0, 0, 0)


@given(series(max_order=7, unit=False), st.integers(0, 5))
def test_nonnegative_powers_match_naive(f, k):
    ref = tuple(naive_pow(f.coeffs, k, f.order))
    for alg in PowerAlgorithm:
        assert power(f, k, alg).coeffs == ref


@given(series(max_order=9), st.integers(-6, 6))
def test_all_algorithms_agree(f, k):
    ref = pow_miller(f, k)
    for alg in applicable_algorithms(k):
        assert power(f, k, alg) == ref


def test_random_agreement_order_24():
    rng = random.Random(7)
    for _ in range(3):
        f = random_series(rng, 24)
        for k in (-3, 2, 5):
            ref = pow_miller(f, k)
            for alg in applicable_algorithms(k):
                assert power(f, k, alg) == ref


@given(series(max_order=6), st.integers(-3, 3), st.integers(-3, 3))
def test_group_laws(f, j, k):
    one = TruncatedSeries.one(f.order)
    assert mul(power(f, j), power(f, k)) == power(f, j + k)
    assert power(power(f, j), k) == power(f, j * k)
    assert power(f, 1) == f
    assert power(f, 0) == one


def test_power_counts():
    f = S([1, 1, 1, 1, 1, 1, 1])
    _, miller = power_with_count(f, 3, "miller")
    _, closed = power_with_count(f, 3, PowerAlgorithm.CLOSED_FORM)
    assert miller == 6 * 7 // 2
    assert closed == sum(partition_counts(6)[1:])
    with pytest.raises(ValueError):
        power_with_count(f, 3, "bogus")


def test_applicable_algorithms():
    assert len(applicable_algorithms(2)) == 6
    assert {a.value for a in applicable_algorithms(-1)} == {"miller", "closed_form", "derivative"}


# --- bracket operator ----------------------------------------------------


def test_bracket_examples():
    assert bracket_eval(delta_polynomial([], 0), 4, 0, F(3, 2)) == F(81, 16)
    assert bracket_eval(delta_polynomial([], 0), -2, 0, F(3, 2)) == F(4, 9)
    assert bracket_eval(delta_polynomial([5], 1), 2, 1, 3) == 2 * 3 * 5
    assert bracket_eval(delta_polynomial([1], 1), 0, 1, 0) == 0
    assert bracket_eval(delta_polynomial([1], 1), 1, 1, 0) == 1
    with pytest.raises(NonInvertibleError):
        bracket_eval(delta_polynomial([1], 1), -1, 1, 0)


# --- geometric inverse and identity checks -------------------------------


def test_geometric_inverse_examples():
    assert geometric_inverse_closed([1], 3).coeffs == (1, 1, 1, 1)
    assert geometric_inverse_closed([1, 1], 5).coeffs == (1, 1, 2, 3, 5, 8)
    assert geometric_inverse_closed([], 2).coeffs == (1, 0, 0)


@given(st.lists(small_fractions, max_size=5), st.integers(0, 8))
def test_geometric_inverse_matches_recursive(a, N):
    base = S([1] + [-x for x in a], N)
    assert geometric_inverse_closed(a, N) == inverse_recursive(base)


@pytest.mark.parametrize(
    "coeffs, k, n", [([1, 1], 3, 2), ([1, 1, 1, 0], -2, 3), ([1, 3, 2], 0, 2), ([1, F(1, 2), F(-2, 3)], 5, 2)]
)
def test_binomial_transform_examples(coeffs, k, n):
    assert verify_binomial_transform(S(coeffs, max(n, len(coeffs) - 1)), k, n).passed


@given(series(max_order=6).map(lambda f: f.scale(1 / f[0])), st.integers(-6, 6), st.data())
def test_binomial_transform_random(f, k, data):
    n = data.draw(st.integers(0, f.order))
    assert verify_binomial_transform(f, k, n).passed


def test_binomial_transform_preconditions():
    with pytest.raises(ValueError):
        verify_binomial_transform(S([2, 1]), 1, 1)
    with pytest.raises(ValueError):
        verify_binomial_transform(S([1, 1]), 1, 2)


@pytest.mark.parametrize("k, n", [(1, 0), (1, 7), (2, 2), (3, 4), (6, 12)])
def test_negative_binomial_corollary(k, n):
    r = verify_negative_binomial_corollary(k, n)
    assert r.passed and r.lhs == negative_binomial(k, n)
    with pytest.raises(ValueError):
        verify_negative_binomial_corollary(0, 1)
