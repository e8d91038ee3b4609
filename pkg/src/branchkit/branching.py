"""Restriction multiplicities for nested classical groups.

The multiplicity of the small-group irrep mu inside the big-group irrep
lambda is a single exact determinant (times a power of two for
orthogonal pairs).  This module wires the matrix builder to the exact
determinant and adds everything stated around that fact:

* the interlacing window that carries the support,
* full decompositions over the window,
* closed product forms for the four corank-two patterns,
* the cross-family comparison of coupled rank windows.

``multiplicity`` short-circuits to 0 outside the interlacing window;
pass ``check=True`` to force the determinant evaluation anyway and
assert that it vanishes there (slower, used by the verification paths).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .core import (
    BranchingError,
    BranchPair,
    DominantWeight,
    Family,
    NonIntegerResult,
    WrongLength,
    make_group,
    make_pair,
    make_weight,
)
from .detkit import _check_lengths, build_branch_matrix, det_exact
from .weyl import _dim_product


class WrongCorank(BranchingError):
    """Pair is not one of the four corank-two product patterns."""


class BadRankWindow(BranchingError):
    """Rank parameters outside 0 <= m < n."""


def interlaces(pair: BranchPair, lam: DominantWeight, mu: DominantWeight) -> bool:
    """lambda_i >= mu_i >= lambda_{i+delta} for i = 1..m (vacuous for m=0).

    This window is exactly the support: the branching determinant is
    positive on it and zero off it.
    """
    _check_lengths(pair, lam, mu)
    d = pair.delta
    for i in range(1, pair.m + 1):
        if not (lam.part(i) >= mu.part(i) >= lam.part(i + d)):
            return False
    return True


def branch_determinant(pair: BranchPair, lam: DominantWeight, mu: DominantWeight) -> int:
    """2^two_exp times det of the branch matrix, checked to be a
    non-negative integer (NonIntegerResult otherwise -- that would be an
    implementation bug, not an input condition)."""
    value = det_exact(build_branch_matrix(pair, lam, mu))
    value = 2**pair.two_exp * value
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise NonIntegerResult(f"{pair} lambda={lam} mu={mu}: determinant {value}")
        value = int(value)
    if value < 0:
        raise NonIntegerResult(f"{pair} lambda={lam} mu={mu}: negative determinant {value}")
    return value


def multiplicity(
    pair: BranchPair, lam: DominantWeight, mu: DominantWeight, *, check: bool = False
) -> int:
    """Restriction multiplicity of mu inside lambda.

    Normal mode skips the determinant off the interlacing window; with
    ``check=True`` the determinant is evaluated unconditionally and its
    vanishing is asserted against the window predicate.
    """
    if check:
        value = branch_determinant(pair, lam, mu)
        assert (value > 0) == interlaces(pair, lam, mu), (
            f"window/determinant disagreement for {pair} lambda={lam} mu={mu}: {value}"
        )
        return value
    if not interlaces(pair, lam, mu):
        return 0
    return branch_determinant(pair, lam, mu)


def support(pair: BranchPair, lam: DominantWeight) -> list[DominantWeight]:
    """All dominant mu inside the interlacing window, lexicographically
    descending (mu_1 from lambda_1 down, then nested)."""
    if len(lam) != pair.n:
        raise WrongLength(f"lambda has length {len(lam)}, big rank is {pair.n}")
    m, d = pair.m, pair.delta
    out: list[DominantWeight] = []

    def descend(i: int, prefix: tuple[int, ...], prev: int) -> None:
        if i > m:
            out.append(make_weight(pair.small, prefix))
            return
        hi = min(prev, lam.part(i))
        lo = lam.part(i + d)
        for v in range(hi, lo - 1, -1):
            descend(i + 1, prefix + (v,), v)

    descend(1, (), lam.part(1) if m else 0)
    return out


@dataclass(frozen=True)
class MultiplicityTable:
    """Decomposition rows (mu parts, multiplicity), lex-descending in mu.

    Rows carry plain integer tuples so the same structure can also hold
    the oracle's signed SO(even) characters (negative last coordinate).
    """

    pair: BranchPair
    lam: DominantWeight
    rows: tuple[tuple[tuple[int, ...], int], ...]

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.rows)

    def mult(self, mu_parts: Sequence[int]) -> int:
        return self.as_dict().get(tuple(mu_parts), 0)


def decompose(pair: BranchPair, lam: DominantWeight) -> MultiplicityTable:
    """Full branching table of lambda over the interlacing window."""
    rows = []
    for mu in support(pair, lam):
        c = branch_determinant(pair, lam, mu)
        if c:
            rows.append((mu.parts, c))
    rows.sort(key=lambda row: row[0], reverse=True)
    return MultiplicityTable(pair, lam, tuple(rows))


def dimension_sum(table: MultiplicityTable) -> int:
    """Total dimension carried by a decomposition table.

    For an SO(2m) subgroup a row with mu_m > 0 stands for two distinct
    mirror irreps (last coordinate +mu_m and -mu_m) of equal dimension
    and equal multiplicity, of which the table lists the positive one;
    such rows count twice.  With that reading the total equals the
    dimension of lambda.
    """
    small = table.pair.small
    total = 0
    for mu, c in table.rows:
        d = _dim_product(small, mu)
        if small.so_even and mu and mu[-1] > 0:
            d *= 2
        total += c * d
    return total


# ---------------------------------------------------------------------------
# corank-two product forms


def product_formula(pair: BranchPair, lam: DominantWeight, mu: DominantWeight) -> int:
    """Closed product for the four corank-two patterns (delta = 2):
    GL(n-2) in GL(n), Sp(2n-2) in Sp(2n), SO(2n-1) in SO(2n+1),
    SO(2n-2) in SO(2n).

    Zero unless lambda_j >= mu_j >= lambda_{j+2} throughout (mu padded
    to length n-1); otherwise sort the 2n-1 numbers lambda_1..lambda_n,
    mu_1..mu_{n-1} into x_1 >= y_1 >= x_2 >= ... >= y_{n-1} >= x_n and
    take prod_j (x_j - y_j + 1), with a final factor x_n + 1 for Sp and
    2 x_n + 1 for odd SO.
    """
    if pair.delta != 2:
        raise WrongCorank(f"{pair} has delta={pair.delta}, product form needs 2")
    _check_lengths(pair, lam, mu)
    n = pair.n
    mu_padded = [mu.part(j) for j in range(1, n)]
    for j in range(1, n):
        if not (lam.part(j) >= mu_padded[j - 1] >= lam.part(j + 2)):
            return 0
    merged = sorted(list(lam.parts) + mu_padded, reverse=True)
    x = merged[0::2]
    y = merged[1::2]
    out = 1
    for xj, yj in zip(x, y):
        out *= xj - yj + 1
    if pair.big.family is Family.SP:
        out *= x[-1] + 1
    elif pair.big.so_odd:
        out *= 2 * x[-1] + 1
    return out


# ---------------------------------------------------------------------------
# coupled rank windows across families


@dataclass(frozen=True)
class CompareReport:
    """Cross-family multiplicities for shared (n, m) rank data.

    ``values`` maps pair encodings to multiplicities (None when mu has
    nonzero entries past that pair's subgroup rank, i.e. the subgroup
    irrep does not exist there; the corresponding multiplicity is 0 in
    every identity check).  The three clause fields are None when the
    clause's precondition does not hold, else whether the predicted
    equality held.  This is a report, not an assertion.
    """

    n: int
    m: int
    lam: tuple[int, ...]
    mu: tuple[int, ...]
    values: tuple[tuple[str, int | None], ...]
    clause_short_mu: bool | None
    clause_short_lambda: bool | None
    clause_sp_so: bool | None

    def value_dict(self) -> dict[str, int | None]:
        return dict(self.values)


def _fit(parts: Sequence[int], rank: int) -> tuple[int, ...] | None:
    """Zero-pad or zero-truncate parts to the given rank; None if the
    discarded tail contains a nonzero entry."""
    pt = tuple(int(p) for p in parts)
    if len(pt) > rank:
        if any(pt[rank:]):
            return None
        pt = pt[:rank]
    return pt + (0,) * (rank - len(pt))


def _nonzero_len(parts: Sequence[int]) -> int:
    count = len(parts)
    while count and parts[count - 1] == 0:
        count -= 1
    return count


def compare_pairs(
    n: int, m: int, lam_parts: Sequence[int], mu_parts: Sequence[int]
) -> CompareReport:
    """Evaluate the four coupled pairs GL(2m-n) in GL(n), Sp(2m) in
    Sp(2n), SO(2m+1) in SO(2n+1), SO(2m) in SO(2n) on the same (lambda,
    mu) and report the clause-by-clause equalities:

    * short mu      (needs 2m >= n, l(mu) <= 2m-n):    all four agree
    * short lambda  (needs 2m >= n, l(lambda) <= 2m-n): all four agree
    * sp/so         (needs l(lambda) <= m): the three non-GL pairs agree
    """
    if not (0 <= m < n):
        raise BadRankWindow(f"need 0 <= m < n, got n={n}, m={m}")
    lam = _fit(lam_parts, n)
    if lam is None:
        raise WrongLength(f"lambda {tuple(lam_parts)} has nonzero entries past rank {n}")
    mu_in = tuple(int(p) for p in mu_parts)

    pairs: list[BranchPair] = []
    if 2 * m - n >= 0:
        pairs.append(make_pair(make_group(Family.GL, n), make_group(Family.GL, 2 * m - n)))
    pairs.append(make_pair(make_group(Family.SP, 2 * n), make_group(Family.SP, 2 * m)))
    pairs.append(make_pair(make_group(Family.SO, 2 * n + 1), make_group(Family.SO, 2 * m + 1)))
    pairs.append(make_pair(make_group(Family.SO, 2 * n), make_group(Family.SO, 2 * m)))

    values: list[tuple[str, int | None]] = []
    for pair in pairs:
        mu_fit = _fit(mu_in, pair.m)
        if mu_fit is None:
            values.append((pair.encode(), None))
            continue
        value = multiplicity(pair, make_weight(pair.big, lam), make_weight(pair.small, mu_fit))
        values.append((pair.encode(), value))

    by_family = dict(values)

    def agree(encodings: list[str]) -> bool:
        nums = [by_family.get(enc) or 0 for enc in encodings]
        return len(set(nums)) == 1

    gl_enc = f"GL:{n}/GL:{2 * m - n}"
    sp_enc = f"Sp:{2 * n}/Sp:{2 * m}"
    so_odd_enc = f"SO:{2 * n + 1}/SO:{2 * m + 1}"
    so_even_enc = f"SO:{2 * n}/SO:{2 * m}"
    all_four = [gl_enc, sp_enc, so_odd_enc, so_even_enc]
    window12 = 2 * m >= n

    clause_short_mu = None
    if window12 and _nonzero_len(mu_in) <= 2 * m - n:
        clause_short_mu = agree(all_four)
    clause_short_lambda = None
    if window12 and _nonzero_len(lam) <= 2 * m - n:
        clause_short_lambda = agree(all_four)
    clause_sp_so = None
    if _nonzero_len(lam) <= m:
        clause_sp_so = agree([sp_enc, so_odd_enc, so_even_enc])

    return CompareReport(
        n=n,
        m=m,
        lam=lam,
        mu=mu_in,
        values=tuple(values),
        clause_short_mu=clause_short_mu,
        clause_short_lambda=clause_short_lambda,
        clause_sp_so=clause_sp_so,
    )


def iter_dominant(rank: int, bound: int) -> Iterator[tuple[int, ...]]:
    """All non-increasing tuples of the given rank with entries in
    [0, bound], lexicographically descending.  Scan helper for tests and
    the verification paths."""
    if rank == 0:
        yield ()
        return
    for first in range(bound, -1, -1):
        for rest in iter_dominant(rank - 1, first):
            yield (first,) + rest
