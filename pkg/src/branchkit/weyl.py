"""Weyl dimension formulas, in two independent shapes.

``weyl_dim_product`` is the classical positive-root product, evaluated
as one exact rational with doubled staircase entries so the odd
orthogonal half-integers never leave the integers.  ``weyl_dim_det`` is
the binomial-determinant reformulation (the m = 0 degeneration of the
branching matrices); the two must agree everywhere, and the test suite
checks that exhaustively on a window.
"""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import binom_ext
from .core import ClassicalGroup, DominantWeight, Family, NonIntegerResult, WrongLength
from .detkit import det_exact


def rho(group: ClassicalGroup) -> tuple[Fraction, ...]:
    """Half-sum of positive roots in coordinates, as exact Fractions.

    GL(n) and SO(2n): (n-1, ..., 1, 0); Sp(2n): (n, ..., 2, 1);
    SO(2n+1): (n-1/2, ..., 3/2, 1/2).  Empty for rank 0.
    """
    n = group.rank
    if group.family is Family.GL or group.so_even:
        return tuple(Fraction(n - i) for i in range(1, n + 1))
    if group.family is Family.SP:
        return tuple(Fraction(n - i + 1) for i in range(1, n + 1))
    return tuple(Fraction(2 * (n - i) + 1, 2) for i in range(1, n + 1))


def _doubled_rho(group: ClassicalGroup) -> tuple[int, ...]:
    return tuple(int(2 * x) for x in rho(group))


def _check_len(group: ClassicalGroup, parts: tuple[int, ...]) -> None:
    if len(parts) != group.rank:
        raise WrongLength(f"weight length {len(parts)} vs rank {group.rank} of {group}")


def _dim_product(group: ClassicalGroup, parts: tuple[int, ...]) -> int:
    """Positive-root product on raw parts; also used by the oracle."""
    _check_len(group, parts)
    rho2 = _doubled_rho(group)
    a = [2 * parts[i] + rho2[i] for i in range(len(parts))]
    b = list(rho2)
    num = 1
    den = 1
    n = len(parts)
    if group.family is Family.GL:
        for i in range(n):
            for j in range(i + 1, n):
                num *= a[i] - a[j]
                den *= b[i] - b[j]
    else:
        for i in range(n):
            for j in range(i + 1, n):
                num *= a[i] * a[i] - a[j] * a[j]
                den *= b[i] * b[i] - b[j] * b[j]
        if group.family is Family.SP or group.so_odd:
            for i in range(n):
                num *= a[i]
                den *= b[i]
    if den == 0 or num % den:
        raise NonIntegerResult(f"dimension product {num}/{den} for {group}, {parts}")
    dim = num // den
    if dim <= 0:
        raise NonIntegerResult(f"dimension {dim} <= 0 for {group}, {parts}")
    return dim


def weyl_dim_product(group: ClassicalGroup, lam: DominantWeight) -> int:
    """Irreducible dimension by the positive-root product formula."""
    return _dim_product(group, lam.parts)


def weyl_dim_det(group: ClassicalGroup, lam: DominantWeight) -> int:
    """Irreducible dimension as a prefactored binomial determinant.

    GL(n):          det binom(lam_i + n - i, n - j)
    Sp(2n):         det binom(lam_i - i + 2n - j + 1, 2n - 2j + 1)
    SO(2n+1):  2^n  det binom(lam_i - i + 2n - j + 1/2, 2n - 2j + 1)
    SO(2n):  2^(n-1) det binom(lam_i - i + 2n - j - 1/2, 2n - 2j)
    """
    _check_len(group, lam.parts)
    n = group.rank
    if n == 0:
        return 1
    half = Fraction(1, 2)
    fam = group.family
    mat = []
    for i in range(1, n + 1):
        li = lam.parts[i - 1]
        row = []
        for j in range(1, n + 1):
            if fam is Family.GL:
                row.append(binom_ext(li + n - i, n - j))
            elif fam is Family.SP:
                row.append(binom_ext(li - i + 2 * n - j + 1, 2 * n - 2 * j + 1))
            elif group.so_odd:
                row.append(binom_ext(li - i + 2 * n - j + half, 2 * n - 2 * j + 1))
            else:
                row.append(binom_ext(li - i + 2 * n - j - half, 2 * n - 2 * j))
        mat.append(row)
    pref = 1
    if group.so_odd:
        pref = 2**n
    elif group.so_even:
        pref = 2 ** (n - 1)
    value = pref * det_exact(mat)
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise NonIntegerResult(f"determinant dimension {value} for {group}, {lam}")
        value = int(value)
    if value <= 0:
        raise NonIntegerResult(f"determinant dimension {value} <= 0 for {group}, {lam}")
    return value
