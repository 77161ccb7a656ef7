"""Eulerian polynomials and the F_d family.

The Eulerian cross-check multiplies the bare power sum sum_j (j+1)^d q^j by
(1-q)^(d+1) using plain list arithmetic, so it does not lean on any package
code being tested.
"""

import math

import pytest

from partition_diamonds.polynomials import (
    BivariatePolynomial, UnivariatePolynomial, bipoly_to_json_dict,
    eulerian_poly, fd_at_w1, fd_poly, fd_specialize, poly_to_json_dict,
)


def eulerian_via_power_sum(d, window=40):
    """Coefficients of (sum_j (j+1)^d q^j) * (1-q)^(d+1), plain lists."""
    power = [(j + 1) ** d for j in range(window)]
    out = [0] * window
    for k in range(d + 2):
        sign = -1 if k % 2 else 1
        c = sign * math.comb(d + 1, k)
        for j in range(window - k):
            out[j + k] += c * power[j]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def test_eulerian_small():
    assert eulerian_poly(0).coeffs == (1,)
    assert eulerian_poly(1).coeffs == (1,)
    assert eulerian_poly(2).coeffs == (1, 1)
    assert eulerian_poly(3).coeffs == (1, 4, 1)
    assert eulerian_poly(4).coeffs == (1, 11, 11, 1)


@pytest.mark.parametrize("d", range(1, 7))
def test_eulerian_matches_power_sum(d):
    assert eulerian_poly(d).coeffs == eulerian_via_power_sum(d)


@pytest.mark.parametrize("d", range(1, 11))
def test_eulerian_positive_palindromic_factorial_sum(d):
    coeffs = eulerian_poly(d).coeffs
    assert all(c > 0 for c in coeffs)
    assert coeffs == coeffs[::-1]
    assert sum(coeffs) == math.factorial(d)


def test_fd_small():
    assert fd_poly(1).terms == {(0, 0): 1}
    assert fd_poly(2).terms == {(0, 0): 1, (1, 1): 1}
    assert fd_poly(3).terms == {(0, 0): 1, (1, 1): 2, (1, 2): 2, (2, 3): 1}


@pytest.mark.parametrize("d", range(1, 9))
def test_fd_degree_in_q0(d):
    assert fd_poly(d).degree_q0() == d - 1


@pytest.mark.parametrize("d", range(1, 13))
def test_fd_at_w1_is_eulerian(d):
    assert fd_at_w1(d) == eulerian_poly(d)


def test_fd_specialize_values():
    # one-cell numerators of the diamond products
    assert fd_specialize(2, 1, 1, 5).coeffs == (1, 0, 1, 0, 0)
    assert fd_specialize(1, 3, 2, 6) == \
        fd_specialize(1, 7, 1, 6)  # F_1 = 1 regardless of exponents
    got = fd_specialize(3, 5, 1, 14)
    assert got.nonzero_terms() == [(0, 1), (6, 2), (7, 2), (13, 1)]


def test_fd_specialize_rejects_bad_exponents():
    with pytest.raises(ValueError):
        fd_specialize(2, 0, 1, 5)
    with pytest.raises(ValueError):
        fd_specialize(2, 1, -1, 5)


def test_division_guard_fires_on_nonexact_input():
    p = BivariatePolynomial({(0, 0): 1, (0, 1): 1})  # 1 + w, not divisible
    with pytest.raises(ArithmeticError):
        p.divide_by_one_minus_w()


def test_univariate_basics():
    p = UnivariatePolynomial.from_coeffs([1, 2, 0, 0])
    assert p.coeffs == (1, 2) and p.degree == 1
    assert p.derivative().coeffs == (2,)
    assert p(10) == 21
    zero = UnivariatePolynomial.from_coeffs([0, 0])
    assert zero.coeffs == () and zero.degree == -1


def test_json_shapes():
    d = poly_to_json_dict(eulerian_poly(3))
    assert d == {"var": "q", "coeffs": ["1", "4", "1"]}
    b = bipoly_to_json_dict(fd_poly(3))
    assert b["vars"] == ["q0", "w"]
    assert b["terms"] == [
        {"i": 0, "j": 0, "c": "1"},
        {"i": 1, "j": 1, "c": "2"},
        {"i": 1, "j": 2, "c": "2"},
        {"i": 2, "j": 3, "c": "1"},
    ]
