"""Branching matrices and exact rational determinants.

The restriction multiplicity for a branching pair is (up to a power of
two for orthogonal pairs) the determinant of an n x n matrix indexed by
the big rank n.  Entry (i, j) depends on the shift

    u[i][j] = lambda_i - mu_j + j - i            (weights zero-padded)

through a truncated binomial in the first m columns (m = small rank)
and a family-specific extended binomial in the remaining columns, whose
lower index shrinks with j so the matrix ends in a unitriangular-ish
tail.  Everything here is exact: entries are ints or Fractions, and the
determinant routines never touch floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .combinatorics import binom_ext, binom_trunc
from .core import BranchPair, DominantWeight, Family, WrongLength

Entry = int | Fraction
Matrix = list[list[Entry]]


def _check_lengths(pair: BranchPair, lam: DominantWeight, mu: DominantWeight) -> None:
    if len(lam) != pair.n:
        raise WrongLength(f"lambda has length {len(lam)}, big rank is {pair.n}")
    if len(mu) != pair.m:
        raise WrongLength(f"mu has length {len(mu)}, small rank is {pair.m}")


def shift_table(pair: BranchPair, lam: DominantWeight, mu: DominantWeight) -> list[list[int]]:
    """n x n table of lambda_i - mu_j + j - i (1-based i, j; 0-based lists)."""
    _check_lengths(pair, lam, mu)
    n = pair.n
    return [
        [lam.part(i) - mu.part(j) + j - i for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]


def build_branch_matrix(pair: BranchPair, lam: DominantWeight, mu: DominantWeight) -> Matrix:
    """The determinant matrix for the pair: partition columns then
    dimension-type columns.

    Columns j <= m count lattice points, {u + root_mult-1 over root_mult-1}
    truncated; columns j > m are extended binomials whose arguments mirror
    the Weyl dimension determinant of the big group (they are exactly that
    matrix when m = 0).  SO columns j > m carry half-integer arguments.
    """
    _check_lengths(pair, lam, mu)
    n, m = pair.n, pair.m
    u = shift_table(pair, lam, mu)
    fam = pair.big.family
    p = pair.big.size
    half = Fraction(1, 2)
    rows: Matrix = []
    for i in range(n):
        row: list[Entry] = []
        for j in range(1, n + 1):
            uij = u[i][j - 1]
            if j <= m:
                row.append(binom_trunc(uij + pair.root_mult - 1, pair.root_mult - 1))
            elif fam is Family.GL:
                row.append(binom_ext(uij + n - j, n - j))
            elif fam is Family.SP:
                row.append(binom_ext(uij + 2 * n - 2 * j + 1, 2 * n - 2 * j + 1))
            else:
                row.append(binom_ext(uij + (p - 2 * j) - half, p - 2 * j))
        rows.append(row)
    return rows


def _bareiss_int(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; mutates m; exact integer result."""
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pk = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                # Bareiss: the subtraction is always divisible by the previous pivot
                row_i[j] = (pk * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


def det_exact(matrix: Sequence[Sequence[Entry]]) -> int | Fraction:
    """Exact determinant of a square int/Fraction matrix; 1 for 0x0.

    Denominators are cleared column by column (the SO columns have
    denominators dividing a power of two, so this stays cheap), the
    integer determinant is computed by fraction-free elimination, and
    the cleared factor is divided back out at the end.
    """
    n = len(matrix)
    if n == 0:
        return 1
    work: list[list[Entry]] = [list(row) for row in matrix]
    for row in work:
        if len(row) != n:
            raise ValueError("matrix is not square")
    clear = 1
    for j in range(n):
        d = 1
        for i in range(n):
            e = work[i][j]
            if isinstance(e, Fraction):
                d = d * e.denominator // gcd(d, e.denominator)
        if d != 1:
            for i in range(n):
                scaled = work[i][j] * d
                work[i][j] = int(scaled)
            clear *= d
    det = _bareiss_int(work)  # type: ignore[arg-type]
    if clear == 1:
        return det
    q = Fraction(det, clear)
    return int(q) if q.denominator == 1 else q


def det_fraction_gauss(matrix: Sequence[Sequence[Entry]]) -> int | Fraction:
    """Plain rational elimination with first-nonzero pivoting.

    Slower than det_exact; kept as the independent cross-check route
    (the two must agree on every input).
    """
    n = len(matrix)
    if n == 0:
        return 1
    work = [[Fraction(e) for e in row] for row in matrix]
    for row in work:
        if len(row) != n:
            raise ValueError("matrix is not square")
    sign = 1
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if work[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            work[k], work[piv] = work[piv], work[k]
            sign = -sign
        pivot = work[k][k]
        det *= pivot
        for i in range(k + 1, n):
            factor = work[i][k] / pivot
            if factor == 0:
                continue
            row_i = work[i]
            row_k = work[k]
            for j in range(k, n):
                row_i[j] -= factor * row_k[j]
    det *= sign
    return int(det) if det.denominator == 1 else det
