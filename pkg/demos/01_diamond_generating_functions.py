"""Counting d-fold partition diamonds two ways.

A d-fold partition diamond places non-negative integers on a chain of links
a_0, a_1, ... with d fan nodes between consecutive links, every edge forcing
a "greater or equal".  r_d(n) counts diamonds whose node values sum to n;
the Schmidt-type variant s_d(n) sums only the links.

This script builds both counting series from their closed-form products and
checks them coefficient by coefficient against raw enumeration of the
diamonds themselves.
"""

from partition_diamonds import (
    count_rd_upto, count_sd, rd_series, sd_series,
)

N = 16

print("r_d(n): all-node weight")
print("n:      ", *[f"{n:6d}" for n in range(N)])
for d in (1, 2, 3):
    closed = rd_series(d, N).coeffs
    raw = count_rd_upto(d, N - 1)
    assert list(closed) == raw, "closed form disagrees with enumeration!"
    print(f"d={d}:    ", *[f"{c:6d}" for c in closed])

print()
print("d=1 recovers the classical partition numbers p(n).")
print()

print("s_d(n): link weight only (Schmidt type)")
print("n:      ", *[f"{n:6d}" for n in range(N)])
for d in (1, 2, 3):
    closed = sd_series(d, N).coeffs
    raw = [count_sd(d, n) for n in range(N)]
    assert list(closed) == raw
    print(f"d={d}:    ", *[f"{c:6d}" for c in closed])

print()
print("s_d(1) is always 2^d: the first link is forced to 1 and each of the")
print("d fan nodes beside it independently takes 0 or 1.")
for d in range(1, 7):
    assert count_sd(d, 1) == 2 ** d
print("checked for d = 1..6.")
