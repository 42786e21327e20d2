from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from blockhh.series import (
    Series,
    one,
    partition_gf,
    pcore_count_gf,
    section,
    series_add,
    series_inv,
    series_mul,
    shift,
    substitute_power,
    truncate,
)

import oracles

small_series = st.lists(
    st.integers(-9, 9) | st.fractions(max_denominator=6), min_size=1, max_size=10
).map(Series)

unit_series = st.tuples(
    st.sampled_from([1, -1, 2, 3, Fraction(1, 2)]),
    st.lists(st.integers(-5, 5), max_size=8),
).map(lambda t: Series([t[0], *t[1]]))


def test_add_cancellation():
    assert series_add(Series([1, 1]), Series([1, -1])) == Series([2, 0])


def test_add_zero_identity():
    a = Series([3, Fraction(1, 2), -4])
    assert series_add(a, Series([0, 0, 0])) == a


def test_add_truncates_to_min_order():
    a = Series([1, 0, 2])
    b = Series([0, 1, 0, 0, 0])
    assert series_add(a, b) == Series([1, 1, 2])


def test_mul_difference_of_squares():
    assert series_mul(Series([1, 1, 0]), Series([1, -1, 0])) == Series([1, 0, -1])


def test_mul_one_identity():
    a = Series([2, -3, Fraction(5, 7), 0])
    assert series_mul(a, one(4)) == a


def test_mul_partition_gf_by_one_minus_t():
    # coefficients are p(n) - p(n-1); frozen from enumerating partitions of n <= 5
    got = series_mul(partition_gf(6), Series([1, -1, 0, 0, 0, 0]))
    assert got == Series([1, 0, 1, 1, 2, 2])
    diffs = [
        oracles.partition_count(n) - (oracles.partition_count(n - 1) if n else 0)
        for n in range(6)
    ]
    assert list(got.coeffs) == diffs


def test_inv_geometric():
    assert series_inv(Series([1, -1, 0, 0])) == Series([1, 1, 1, 1])


def test_inv_of_one():
    assert series_inv(one(5)) == one(5)


def test_inv_partition_gf_pentagonal():
    inv = series_inv(partition_gf(5))
    assert inv == Series([1, -1, -1, 0, 0])
    assert series_mul(partition_gf(5), inv) == one(5)


def test_inv_rejects_non_unit():
    with pytest.raises(ValueError):
        series_inv(Series([0, 1, 2]))
    with pytest.raises(ValueError):
        series_inv(Series([]))


@given(unit_series)
def test_inv_is_right_inverse(a):
    assert series_mul(a, series_inv(a)) == one(a.order)


def test_shift_up():
    assert shift(Series([1, 1]), 2) == Series([0, 0, 1, 1])


def test_shift_down():
    assert shift(Series([0, 1, 0, 1]), -1) == Series([1, 0, 1])


def test_shift_down_rejects_nondivisible():
    with pytest.raises(ValueError, match="not divisible"):
        shift(Series([0, 1, 1]), -2)


def test_block_hh1_series_divisible_by_t_only_once():
    from blockhh.hochschild import hh1_block_series

    lowered = shift(hh1_block_series(3, 10), -1)
    assert lowered[0] == 1
    with pytest.raises(ValueError):
        shift(hh1_block_series(3, 10), -2)


def test_substitute_power_basic():
    assert substitute_power(Series([1, 1]), 2) == Series([1, 0, 1, 0])


def test_substitute_power_identity():
    a = Series([4, -1, Fraction(2, 3)])
    assert substitute_power(a, 1) == a


@given(small_series, st.integers(2, 5))
def test_substitute_power_support(a, m):
    b = substitute_power(a, m)
    assert b.order == m * a.order
    assert all(c == 0 for n, c in enumerate(b.coeffs) if n % m != 0)


def test_section_basic():
    assert section(Series([1, 1, 1, 1]), 2, 0) == Series([1, 1])


def test_section_of_partition_gf_odd_part():
    # p(1), p(3), p(5) = 1, 3, 7 by direct enumeration
    assert [oracles.partition_count(k) for k in (1, 3, 5)] == [1, 3, 7]
    got = truncate(section(partition_gf(11), 2, 1), 3)
    assert got == Series([1, 3, 7])


@given(small_series, st.integers(1, 5))
def test_section_inverts_substitute_power(a, m):
    assert section(substitute_power(a, m), m, 0) == a
    for s in range(1, m):
        assert all(c == 0 for c in section(substitute_power(a, m), m, s).coeffs)


@given(small_series, st.integers(1, 5))
def test_section_reassembly(a, m):
    total = Series([0] * a.order)
    for s in range(m):
        piece = truncate(shift(substitute_power(section(a, m, s), m), s), a.order)
        total = series_add(total, piece)
    assert total == a


def test_partition_gf_small_values():
    gf = partition_gf(8)
    assert gf[0] == 1
    assert gf[5] == 7


def test_partition_gf_matches_enumeration():
    gf = partition_gf(31)
    for n in range(31):
        assert gf[n] == oracles.partition_count(n)


def test_pcore_count_gf_constant_term():
    for p in (2, 3, 5, 7):
        assert pcore_count_gf(p, 4)[0] == 1


def test_pcore_count_gf_triangular_for_p2():
    gf = pcore_count_gf(2, 16)
    triangular = {k * (k + 1) // 2 for k in range(6)}
    for n in range(16):
        assert gf[n] == (1 if n in triangular else 0)


def test_pcore_count_gf_p3_at_4():
    assert pcore_count_gf(3, 5)[4] == 2


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_pcore_count_gf_matches_strip_enumeration(p):
    gf = pcore_count_gf(p, 15)
    for n in range(15):
        assert gf[n] == oracles.core_count(n, p)


def test_pcore_count_gf_matches_count_pcores():
    from blockhh.partitions import count_pcores

    for p in (2, 3, 5, 7):
        gf = pcore_count_gf(p, 21)
        for n in range(21):
            assert gf[n] == count_pcores(n, p)


def test_rejects_float_coefficients():
    with pytest.raises(TypeError):
        Series([1.0, 2.0])


def test_order_is_coefficient_count():
    a = Series([5, 0, 0])
    assert a.order == 3
    assert truncate(a, 2).order == 2
