"""Omega elimination: brute force and closed form must agree everywhere."""

import pytest

from partition_diamonds.omega import (
    OmegaInstance, UnsupportedInstanceError, crude_Dd1_check,
    omega_bruteforce, omega_closed_form, random_instances, run_omega_suite,
)
from partition_diamonds.series import TruncatedSeries, ZZ


def two_factor_geometric(e1, e2, order):
    """1/((1-q^e1)(1-q^e2)) by direct double counting."""
    coeffs = [0] * order
    for a in range(0, order, e1):
        for b in range(a, order, e2):
            coeffs[b] += 1
    return TruncatedSeries.from_coeffs(coeffs)


def test_instance_validation():
    with pytest.raises(ValueError):
        OmegaInstance(0, 0, (), 1)
    with pytest.raises(ValueError):
        OmegaInstance(0, 2, (1,), 1)
    with pytest.raises(ValueError):
        OmegaInstance(0, 1, (0,), 1)
    with pytest.raises(ValueError):
        OmegaInstance(0, 1, (1,), 0)


def test_bruteforce_base_elimination():
    # j=0, d=1: lambda elimination gives 1/((1-x)(1-xy)), here x=q, y=q^2
    inst = OmegaInstance(0, 1, (1,), 2)
    assert omega_bruteforce(inst, 8) == two_factor_geometric(1, 3, 8)


def test_bruteforce_constant_term():
    inst = OmegaInstance(0, 1, (1,), 1)
    assert omega_bruteforce(inst, 1).coeffs == (1,)


def test_closed_form_base_elimination():
    inst = OmegaInstance(0, 1, (1,), 2)
    assert omega_closed_form(inst, 8) == two_factor_geometric(1, 3, 8)


def test_closed_form_trivial():
    inst = OmegaInstance(0, 2, (1, 1), 1)
    assert omega_closed_form(inst, 1).coeffs == (1,)


@pytest.mark.parametrize("inst", [
    OmegaInstance(2, 2, (1, 2), 3),
    OmegaInstance(1, 1, (2,), 1),
    OmegaInstance(-1, 3, (1, 1, 2), 2),
    OmegaInstance(4, 2, (5, 3), 4),
])
def test_cross_evaluation(inst):
    order = 12
    assert omega_bruteforce(inst, order) == omega_closed_form(inst, order)


def test_base_elimination_across_specializations():
    # j=0, d=1 must give 1/((1-q^a)(1-q^(a+b))) for every exponent pair
    for a in (1, 2, 3, 5):
        for b in (1, 2, 4):
            inst = OmegaInstance(0, 1, (a,), b)
            want = two_factor_geometric(a, a + b, 16)
            assert omega_bruteforce(inst, 16) == want
            assert omega_closed_form(inst, 16) == want


def test_very_negative_j():
    # no lambda exponent can reach zero below the truncation, so the
    # brute force vanishes; the closed form refuses such instances
    inst = OmegaInstance(-50, 2, (1, 1), 1)
    assert omega_bruteforce(inst, 10).is_zero()
    with pytest.raises(UnsupportedInstanceError):
        omega_closed_form(inst, 10)


def test_random_suite_deterministic_and_green():
    report = run_omega_suite(60, seed=7)
    assert report.instances == 60 and report.failures == []
    a = list(random_instances(10, seed=123))
    b = list(random_instances(10, seed=123))
    assert a == b


def test_crude_check_examples():
    assert crude_Dd1_check(1, 1, 1, 1, 20)
    assert crude_Dd1_check(2, 1, 1, 1, 20)
    assert crude_Dd1_check(3, 2, 1, 1, 15)


def test_crude_check_d1_closed_form_shape():
    # both sides are 1/((1-q)(1-q^2)(1-q^3)) at unit exponents
    assert crude_Dd1_check(1, 1, 1, 1, 20)


def test_crude_check_guard():
    with pytest.raises(ValueError, match="guard"):
        crude_Dd1_check(4, 1, 1, 1, 10)
    with pytest.raises(ValueError, match="guard"):
        crude_Dd1_check(2, 1, 1, 1, 31)
