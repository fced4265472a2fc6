import pytest

from fps_exact.partitions import (
    partition_det,
    partition_det_table,
    partition_pentagonal,
    pentagonal_coeffs,
    pentagonal_det,
    verify_euler_product,
    verify_gf_identity,
)

from oracles import partition_counts


def test_pentagonal_coeffs():
    assert pentagonal_coeffs(7).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)
    assert pentagonal_coeffs(0).coeffs == (1,)
    assert sum(1 for c in pentagonal_coeffs(100).coeffs[1:] if c) == 16
    with pytest.raises(ValueError):
        pentagonal_coeffs(-1)


def test_pentagonal_recurrence_matches_dp():
    dp = partition_counts(500)
    t = partition_pentagonal(500)
    assert list(t.values) == dp
    assert t[100] == 190569292
    assert t[5] == 7 and t[0] == 1 and t[1] == 1
    assert all(t[n] < t[n + 1] for n in range(2, 500))


def test_determinant_route():
    dp = partition_counts(60)
    assert list(partition_det_table(60).values) == dp
    assert partition_det(0) == 1
    assert partition_det(1) == 1
    assert partition_det(5) == 7
    assert partition_det(20) == 627


def test_pentagonal_det():
    coeffs = pentagonal_coeffs(40).coeffs
    for n in range(1, 41):
        v = pentagonal_det(n)
        assert v in (-1, 0, 1) and v == coeffs[n]
    assert (pentagonal_det(1), pentagonal_det(3), pentagonal_det(5)) == (-1, 0, 1)
    with pytest.raises(ValueError):
        pentagonal_det(0)


@pytest.mark.parametrize("N", [0, 1, 50, 200])
def test_gf_identity(N):
    assert verify_gf_identity(N).passed


@pytest.mark.parametrize("N", [1, 7, 60])
def test_euler_product(N):
    r = verify_euler_product(N)
    assert r.passed
    if N == 7:
        assert r.lhs == (1, -1, -1, 0, 0, 1, 0, 1)
