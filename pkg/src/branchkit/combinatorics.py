"""Exact binomials and the restricted-root partition counter.

Two binomial variants, deliberately kept apart:

* ``binom_ext`` extends the upper argument to negative integers and
  half-integers via the falling-factorial polynomial.
* ``binom_trunc`` is the combinatorial coefficient that is *zero*
  whenever the upper argument drops below the lower one; it must never
  be routed through the polynomial form (the two disagree for negative
  upper arguments, and the branching matrices need the truncated kind
  in the partition columns).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Sequence


def binom_ext(x: int | Fraction, k: int) -> int | Fraction:
    """x(x-1)...(x-k+1)/k! for integer or half-integer x; 1 when k = 0.

    Accepts ints and Fractions with denominator 1 or 2 only; anything
    else raises ValueError so a stray general rational is caught at the
    boundary instead of surfacing as a wrong determinant later.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if isinstance(x, Fraction):
        if x.denominator == 1:
            x = int(x)
        elif x.denominator != 2:
            raise ValueError(f"binom_ext needs an integer or half-integer, got {x}")
    elif not isinstance(x, int):
        raise ValueError(f"binom_ext needs an integer or half-integer, got {x!r}")
    if k == 0:
        return 1
    if isinstance(x, int):
        if x >= 0:
            return comb(x, k)  # comb is 0 for x < k
        # (-1)^k * C(k - x - 1, k) for negative integer x
        return (-1) ** k * comb(k - x - 1, k)
    # half-integer: keep everything integral by doubling
    t = x.numerator  # x = t/2 with t odd
    num = 1
    for i in range(k):
        num *= t - 2 * i
    return Fraction(num, 2**k * factorial(k))


def binom_trunc(n: int, k: int) -> int:
    """C(n, k) when n >= k, else 0 (negative n included)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return comb(n, k) if n >= k else 0


def partition_value(xi: Sequence[int], r: int) -> int:
    """Number of ways to write the vector xi as an N-combination of its
    coordinate directions, each direction supplied with multiplicity r.

    The count factors over coordinates: the j-th factor is the number of
    weak r-part compositions of xi_j, i.e. {xi_j + r - 1 over r - 1}
    truncated to 0 for negative xi_j.  Empty xi gives 1 (then r may be 0).
    """
    if xi and r < 1:
        raise ValueError(f"r must be >= 1 for nonempty arguments, got r={r}")
    out = 1
    for c in xi:
        out *= binom_trunc(c + r - 1, r - 1)
        if out == 0:
            return 0
    return out
