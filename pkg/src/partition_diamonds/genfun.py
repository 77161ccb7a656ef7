"""Closed-form generating functions for d-fold partition diamonds.

rd_series counts diamonds by total node sum, sd_series counts Schmidt-type
diamonds by link sum only, and ddn_series_closed gives the fixed-length
series under the one-variable specialization (every node variable set to q).
All infinite products go through product_family, whose stabilization
contract guarantees that factors beyond the truncation order contribute
nothing.

mersmann_F_series computes the weight-1/2 eta quotient

    prod (1-q^{6n}) (1-q^n)^2 / ((1-q^{3n}) (1-q^{2n}))

both as that product and as its two-theta-sum expansion, and reports
whether they agree; downstream congruence arguments lean on the theta form
only after this check passes.
"""

from __future__ import annotations

from typing import NamedTuple

from .polynomials import eulerian_poly, fd_specialize
from .series import RingSpec, TruncatedSeries, ZZ, product_family

__all__ = [
    "rd_series",
    "sd_series",
    "sd_series_factorwise",
    "ddn_series_closed",
    "mersmann_F_series",
    "MersmannResult",
]


def _one_minus_qn(n: int, order: int, ring: RingSpec) -> TruncatedSeries:
    return TruncatedSeries.from_terms({0: 1, n: -1}, order, ring)


def rd_series(d: int, order: int, ring: RingSpec = ZZ) -> TruncatedSeries:
    """Series counting d-fold partition diamonds by total node sum.

    The n-th factor is F_d(q^{(n-1)(d+1)+1}, q) / (1 - q^n).
    """
    if d < 1 or order < 1:
        raise ValueError("need d >= 1 and order >= 1")

    def factor(n: int) -> TruncatedSeries:
        a = (n - 1) * (d + 1) + 1
        k = n - 1  # cell index; both exponent conventions must agree
        assert a == k * (d + 1) + 1
        num = fd_specialize(d, a, 1, order)
        if not ring.is_exact:
            num = TruncatedSeries.from_coeffs(num.coeffs, ring=ring)
        return num * _one_minus_qn(n, order, ring).inverse()

    return product_family(factor, order, ring)


def sd_series(d: int, order: int, ring: RingSpec = ZZ) -> TruncatedSeries:
    """Series counting Schmidt-type d-fold diamonds by link sum.

    The n-th factor is A_d(q^n) / (1 - q^n)^(d+1) with A_d the Eulerian
    polynomial.
    """
    if d < 1 or order < 1:
        raise ValueError("need d >= 1 and order >= 1")
    a_d = eulerian_poly(d)

    def factor(n: int) -> TruncatedSeries:
        num = a_d.to_series(order, ring, exponent_scale=n)
        return num * _one_minus_qn(n, order, ring) ** (-(d + 1))

    return product_family(factor, order, ring)


def sd_series_factorwise(d: int, order: int, ring: RingSpec = ZZ) -> TruncatedSeries:
    """Same series as sd_series, with each factor built as a bare power sum.

    The n-th factor is sum_j (j+1)^d q^{jn}, written out termwise without
    Eulerian polynomials; agreement with sd_series is the Euler identity
    behind the sd closed form.
    """
    if d < 1 or order < 1:
        raise ValueError("need d >= 1 and order >= 1")

    def factor(n: int) -> TruncatedSeries:
        terms = {}
        j = 0
        while j * n < order:
            terms[j * n] = (j + 1) ** d
            j += 1
        return TruncatedSeries.from_terms(terms, order, ring)

    return product_family(factor, order, ring)


def ddn_series_closed(d: int, n: int, order: int) -> TruncatedSeries:
    """Fixed-length diamond series from the transfer product, all nodes -> q.

    For cell k the factor is F_d(q^{k(d+1)+1}, q) over the d+1 factors
    (1 - q^{k(d+1)+1+t}), t = 0..d, and the chain closes with
    1 / (1 - q^{(n+1)+dn}).
    """
    if d < 1 or n < 1 or order < 1:
        raise ValueError("need d >= 1, n >= 1, order >= 1")
    acc = TruncatedSeries.one(order, ZZ)
    for k in range(n):
        base = k * (d + 1) + 1
        acc = acc * fd_specialize(d, base, 1, order)
        for t in range(d + 1):
            acc = acc * _one_minus_qn(base + t, order, ZZ).inverse()
    tail = (n + 1) + d * n
    return acc * _one_minus_qn(tail, order, ZZ).inverse()


class MersmannResult(NamedTuple):
    series: TruncatedSeries
    theta: TruncatedSeries
    agree: bool


def mersmann_F_series(order: int) -> MersmannResult:
    """The eta quotient F(q), its theta-sum expansion, and their agreement.

    Theta side: sum_t q^{t(t+1)/2} - 3 sum_t q^{(3t+1)(3t+2)/2}.
    """
    if order < 1:
        raise ValueError("order must be >= 1")

    def factor(n: int) -> TruncatedSeries:
        num = _one_minus_qn(6 * n, order, ZZ) * _one_minus_qn(n, order, ZZ) ** 2
        return (num
                * _one_minus_qn(3 * n, order, ZZ).inverse()
                * _one_minus_qn(2 * n, order, ZZ).inverse())

    eta_side = product_family(factor, order, ZZ)

    terms = {}
    t = 0
    while t * (t + 1) // 2 < order:
        e = t * (t + 1) // 2
        terms[e] = terms.get(e, 0) + 1
        t += 1
    t = 0
    while (3 * t + 1) * (3 * t + 2) // 2 < order:
        e = (3 * t + 1) * (3 * t + 2) // 2
        terms[e] = terms.get(e, 0) - 3
        t += 1
    theta_side = TruncatedSeries.from_terms(terms, order, ZZ)

    return MersmannResult(eta_side, theta_side, eta_side == theta_side)
