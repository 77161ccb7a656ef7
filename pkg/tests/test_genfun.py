"""Closed-form generating functions against the enumeration oracle."""

import pytest

from partition_diamonds.genfun import (
    ddn_series_closed, mersmann_F_series, rd_series, sd_series,
    sd_series_factorwise,
)
from partition_diamonds.oracle import (
    count_rd_upto, count_sd, series_Ddn_bruteforce,
)
from partition_diamonds.series import (
    RingSpec, TruncatedSeries, ZZ, pentagonal_series, reduce_mod, ts_invert,
)


def test_rd_d1_is_partition_series():
    assert rd_series(1, 8).coeffs == (1, 1, 2, 3, 5, 7, 11, 15)
    # same thing through the pentagonal expansion
    assert rd_series(1, 500) == ts_invert(pentagonal_series(500))


def test_rd_small_values():
    assert rd_series(2, 4).coeffs == (1, 1, 3, 4)
    assert rd_series(3, 6).coeffs[0] == 1


@pytest.mark.parametrize("d", (1, 2, 3))
def test_rd_matches_enumeration(d):
    order = 16
    assert rd_series(d, order).coeffs == \
        tuple(count_rd_upto(d, order - 1))


def test_sd_values():
    assert sd_series(1, 6).coeffs == (1, 2, 5, 10, 20, 36)
    assert sd_series(3, 2).coeffs == (1, 8)
    assert sd_series(2, 3).coeffs == (1, 4, 13)


@pytest.mark.parametrize("d", (1, 2, 3))
def test_sd_matches_enumeration(d):
    order = 16
    assert sd_series(d, order).coeffs == \
        tuple(count_sd(d, n) for n in range(order))


def test_power_sum_factor_values():
    # the n=1 factor of the d=1 product is 1 + 2q + 3q^2 + ... = 1/(1-q)^2
    factor = TruncatedSeries.from_terms({j: j + 1 for j in range(5)}, 5)
    assert factor.coeffs == (1, 2, 3, 4, 5)
    one_minus_q = TruncatedSeries.from_terms({0: 1, 1: -1}, 5)
    assert factor == one_minus_q ** (-2)


@pytest.mark.parametrize("d", (1, 2, 3, 4, 5, 6))
def test_sd_factorwise_agrees(d):
    assert sd_series_factorwise(d, 100) == sd_series(d, 100)


def test_sd_mod_ring_matches_reduction():
    for d, m in ((2, 5), (3, 8), (5, 11)):
        assert sd_series(d, 60, RingSpec(m)) == \
            reduce_mod(sd_series(d, 60), m)


def test_rd_mod_ring_matches_reduction():
    assert rd_series(2, 40, RingSpec(5)) == reduce_mod(rd_series(2, 40), 5)


def test_ddn_closed_d1_n1():
    assert ddn_series_closed(1, 1, 7).coeffs == (1, 1, 2, 3, 4, 5, 7)


def test_ddn_closed_constant_terms():
    for d, n in ((1, 3), (2, 2), (4, 1)):
        assert ddn_series_closed(d, n, 5).coeffs[0] == 1


@pytest.mark.parametrize("d,n", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)])
def test_ddn_closed_matches_bruteforce(d, n):
    order = 12
    assert ddn_series_closed(d, n, order) == \
        series_Ddn_bruteforce(d, n, order)


def test_mersmann_identity():
    result = mersmann_F_series(300)
    assert result.agree
    assert result.series.coeffs[0] == 1
    assert result.theta.coeffs[0] == 1
    assert result.series.coeffs[1] == -2
    small = mersmann_F_series(4)
    assert small.agree
