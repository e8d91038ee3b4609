"""Character-theoretic verification oracle, independent of the
determinant formulas.

Pipeline per irrep: enumerate the dominant weights under the highest
weight (closed-form ladder coefficients per Lie type), fill in their
multiplicities top-down with the Freudenthal recursion in exact integer
arithmetic (half-integer staircases handled by doubling), expand to the
full Weyl-orbit multiset, then restrict by dropping the trailing
coordinates and greedily peel off subgroup characters at the
(coordinate-sum, lexicographic)-maximal remaining weight.  Nothing here
touches binomials or determinants, so agreement with the formula side
is meaningful evidence.

SO(2) subgroup characters are indexed by all integers; the oracle keeps
both signs as separate rows (same for higher even orthogonal subgroups,
whose dominant chamber allows a negative last coordinate), and
``fold_mirror_rows`` collapses them for comparison against the
determinant tables, checking the +/- multiplicities match on the way.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .branching import MultiplicityTable
from .core import BranchingError, BranchPair, ClassicalGroup, DominantWeight, Family
from .weyl import _dim_product

DEFAULT_MAX_DIM = 50_000


class ScaleExceeded(BranchingError):
    """Weight-system size above the configured cap."""


class NegativeRemainder(BranchingError):
    """Greedy character peeling went below zero: the multiset was not a
    non-negative sum of subgroup characters.  Must abort loudly."""


@dataclass(frozen=True)
class RootSystem:
    group: ClassicalGroup
    positives: tuple[tuple[int, ...], ...]


def _unit(n: int, i: int, value: int = 1) -> tuple[int, ...]:
    row = [0] * n
    row[i] = value
    return tuple(row)


def _lie_type(group: ClassicalGroup) -> str:
    if group.family is Family.GL:
        return "A"
    if group.family is Family.SP:
        return "C"
    return "B" if group.size % 2 else "D"


def positive_roots(group: ClassicalGroup) -> RootSystem:
    """Positive roots in coordinates.

    GL(n): e_i - e_j; SO(2n): e_i +- e_j; Sp(2n): e_i +- e_j and 2 e_i;
    SO(2n+1): e_i +- e_j and e_i (all for i < j).
    """
    n = group.rank
    tp = _lie_type(group)
    roots: list[tuple[int, ...]] = []
    for i in range(n):
        for j in range(i + 1, n):
            diff = [0] * n
            diff[i], diff[j] = 1, -1
            roots.append(tuple(diff))
            if tp != "A":
                plus = [0] * n
                plus[i], plus[j] = 1, 1
                roots.append(tuple(plus))
    if tp == "B":
        roots.extend(_unit(n, i) for i in range(n))
    elif tp == "C":
        roots.extend(_unit(n, i, 2) for i in range(n))
    return RootSystem(group, tuple(roots))


# ---------------------------------------------------------------------------
# dominant weights below a highest weight

def _ladder_height(tp: str, n: int, diff: tuple[int, ...]) -> int | None:
    """Total simple-root coefficient of ``diff`` if it is a non-negative
    integer combination of the simple roots, else None."""
    if n == 0:
        return 0 if not diff else None
    if tp == "D" and n == 1:
        return 0 if diff[0] == 0 else None
    run = 0
    partial: list[int] = []
    for d in diff:
        run += d
        partial.append(run)
    if tp == "A":
        if partial[-1] != 0 or any(s < 0 for s in partial):
            return None
        return sum(partial[:-1])
    if tp == "B":
        if any(s < 0 for s in partial):
            return None
        return sum(partial)
    if tp == "C":
        if any(s < 0 for s in partial[:-1]):
            return None
        if partial[-1] < 0 or partial[-1] % 2:
            return None
        return sum(partial[:-1]) + partial[-1] // 2
    # D: the last two ladder coefficients average the tail
    if any(s < 0 for s in partial[: n - 2]):
        return None
    tail = partial[n - 2] if n >= 2 else 0
    last = diff[-1]
    if tail < abs(last) or (tail + last) % 2:
        return None
    return sum(partial[: n - 2]) + tail


def _candidate_dominants(
    group: ClassicalGroup, hw: tuple[int, ...]
) -> list[tuple[tuple[int, ...], int]]:
    """Dominant weights mu with hw - mu in the positive root-ladder span,
    paired with the ladder height (0 for hw itself)."""
    n = group.rank
    tp = _lie_type(group)
    if n == 0:
        return [((), 0)]
    bound = abs(hw[0]) if hw else 0
    out: list[tuple[tuple[int, ...], int]] = []

    def consider(mu: tuple[int, ...]) -> None:
        diff = tuple(hw[i] - mu[i] for i in range(n))
        h = _ladder_height(tp, n, diff)
        if h is not None:
            out.append((mu, h))

    def descend(i: int, prefix: tuple[int, ...], prev: int) -> None:
        if tp == "D" and i == n:
            # last coordinate of an even orthogonal chamber may be negative
            for v in range(prev, -prev - 1, -1):
                consider(prefix + (v,))
            return
        if i > n:
            consider(prefix)
            return
        for v in range(prev, -1, -1):
            descend(i + 1, prefix + (v,), v)

    if tp == "D" and n == 1:
        consider(hw)
    else:
        descend(1, (), bound)
    return out


def _dominant_rep(tp: str, vec: tuple[int, ...]) -> tuple[int, ...]:
    """Representative of the Weyl orbit of ``vec`` in the dominant chamber."""
    if tp == "A":
        return tuple(sorted(vec, reverse=True))
    mags = sorted((abs(v) for v in vec), reverse=True)
    if tp == "D":
        negatives = sum(1 for v in vec if v < 0)
        if negatives % 2 and mags[-1] != 0:
            mags[-1] = -mags[-1]
    return tuple(mags)


def _orbit(tp: str, dom: tuple[int, ...]):
    """All distinct Weyl images of a dominant-chamber weight."""
    if tp == "A":
        yield from set(itertools.permutations(dom))
        return
    mags = tuple(abs(v) for v in dom)
    parity = sum(1 for v in dom if v < 0) % 2
    for perm in set(itertools.permutations(mags)):
        nonzero = [i for i, v in enumerate(perm) if v != 0]
        free = tp in ("B", "C") or len(nonzero) < len(perm)
        for signs in itertools.product((1, -1), repeat=len(nonzero)):
            if not free:
                if sum(1 for s in signs if s < 0) % 2 != parity:
                    continue
            w = list(perm)
            for idx, s in zip(nonzero, signs):
                w[idx] = s * perm[idx]
            yield tuple(w)


def _freudenthal_dominant(group: ClassicalGroup, hw: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Multiplicities of the dominant weights of the irrep with highest
    weight ``hw``, by the Freudenthal recursion (exact integers; the
    denominator is computed in the factored form (hw+mu+2rho, hw-mu))."""
    tp = _lie_type(group)
    n = group.rank
    roots = positive_roots(group).positives
    rho2 = tuple(sum(r[i] for r in roots) for i in range(n))
    layers = sorted(_candidate_dominants(group, hw), key=lambda pair: pair[1])
    mult: dict[tuple[int, ...], int] = {}
    for mu, height in layers:
        if height == 0:
            mult[mu] = 1
            continue
        acc = 0
        for alpha in roots:
            for k in range(1, height + 1):
                nu = tuple(mu[i] + k * alpha[i] for i in range(n))
                c = mult.get(_dominant_rep(tp, nu), 0)
                if c == 0:
                    break  # the alpha-string through mu is unbroken
                acc += c * sum(nu[i] * alpha[i] for i in range(n))
        denom = sum((hw[i] + mu[i] + rho2[i]) * (hw[i] - mu[i]) for i in range(n))
        assert denom > 0 and (2 * acc) % denom == 0, (group, hw, mu, acc, denom)
        value = 2 * acc // denom
        assert value > 0, (group, hw, mu, value)
        mult[mu] = value
    return mult


@lru_cache(maxsize=1024)
def _weights_full(group: ClassicalGroup, hw: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Full weight multiset of the irrep ``hw`` (cached; treat as read-only).

    ``hw`` may carry a negative last coordinate for even orthogonal
    groups; that mirror image is computed from the positive one.
    """
    tp = _lie_type(group)
    if tp == "D" and hw and hw[-1] < 0:
        base = _weights_full(group, hw[:-1] + (-hw[-1],))
        return {w[:-1] + (-w[-1],): c for w, c in base.items()}
    full: dict[tuple[int, ...], int] = {}
    for dom, c in _freudenthal_dominant(group, hw).items():
        for w in _orbit(tp, dom):
            full[w] = c
    mass = sum(full.values())
    dim = _dim_product(group, hw)
    assert mass == dim, f"weight mass {mass} != dim {dim} for {group}, {hw}"
    return full


def weight_multiplicities(
    group: ClassicalGroup, lam: DominantWeight, max_dim: int | None = DEFAULT_MAX_DIM
) -> dict[tuple[int, ...], int]:
    """Weight -> multiplicity for the full irrep, as a fresh dict.

    Raises ScaleExceeded when the dimension tops ``max_dim`` (pass None
    to disable the cap)."""
    dim = _dim_product(group, lam.parts)
    if max_dim is not None and dim > max_dim:
        raise ScaleExceeded(f"dim {dim} of {group} weight {lam} exceeds cap {max_dim}")
    return dict(_weights_full(group, lam.parts))


def _is_small_dominant(tp: str, vec: tuple[int, ...]) -> bool:
    if len(vec) <= 1:
        return tp in ("A", "D") or not vec or vec[0] >= 0
    for a, b in zip(vec, vec[1:]):
        if a < b:
            return False
    if tp == "A":
        return True
    if tp == "D":
        return vec[-2] >= abs(vec[-1])
    return vec[-1] >= 0


def restrict_and_decompose(
    pair: BranchPair, lam: DominantWeight, max_dim: int | None = DEFAULT_MAX_DIM
) -> MultiplicityTable:
    """Restrict lambda along the pair and decompose into subgroup
    characters, entirely on the character level.

    Restriction drops the trailing big-rank-minus-small-rank coordinates
    of every weight.  The greedy peel always removes the remaining
    weight that is maximal in (coordinate sum, lex) order; for the
    classical chambers that weight is a highest weight of a remaining
    constituent, so its remaining multiplicity is that constituent's
    multiplicity.  Rows may carry a negative last coordinate for even
    orthogonal subgroups; see ``fold_mirror_rows``.
    """
    dim = _dim_product(pair.big, lam.parts)
    if max_dim is not None and dim > max_dim:
        raise ScaleExceeded(f"dim {dim} of {pair.big} weight {lam} exceeds cap {max_dim}")
    big_weights = _weights_full(pair.big, lam.parts)
    m = pair.m
    tp_small = _lie_type(pair.small)
    remaining: Counter[tuple[int, ...]] = Counter()
    for w, c in big_weights.items():
        remaining[w[:m]] += c
    rows: list[tuple[tuple[int, ...], int]] = []
    while remaining:
        top = max(remaining, key=lambda t: (sum(t), t))
        count = remaining[top]
        if count < 0:
            raise NegativeRemainder(f"{pair} lambda={lam}: weight {top} at {count}")
        assert _is_small_dominant(tp_small, top), (pair, lam, top)
        rows.append((top, count))
        for w, cw in _weights_full(pair.small, top).items():
            left = remaining[w] - count * cw
            if left < 0:
                raise NegativeRemainder(
                    f"{pair} lambda={lam}: peeling {top} drives weight {w} to {left}"
                )
            if left == 0:
                del remaining[w]
            else:
                remaining[w] = left
    rows.sort(key=lambda row: row[0], reverse=True)
    return MultiplicityTable(pair, lam, tuple(rows))


def fold_mirror_rows(
    pair: BranchPair, rows: tuple[tuple[tuple[int, ...], int], ...]
) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Collapse +-last-coordinate mirror rows of an even orthogonal
    subgroup table onto the non-negative representative.

    The two mirrors must appear with the same multiplicity (restriction
    admits an ambient reflection swapping them); ValueError otherwise.
    Tables for other subgroups come back unchanged (sorted).
    """
    small = pair.small
    if not (small.so_even and small.rank >= 1):
        return tuple(sorted(rows, reverse=True))
    plus: dict[tuple[int, ...], int] = {}
    minus: dict[tuple[int, ...], int] = {}
    for mu, c in rows:
        key = mu[:-1] + (abs(mu[-1]),)
        (plus if mu[-1] >= 0 else minus)[key] = c
    for key, c in plus.items():
        if key[-1] > 0 and minus.get(key) != c:
            raise ValueError(f"mirror rows disagree at {key}: +{c} vs -{minus.get(key)}")
    for key in minus:
        if key not in plus:
            raise ValueError(f"negative row {key} has no positive mirror")
    return tuple(sorted(plus.items(), reverse=True))
