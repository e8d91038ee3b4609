"""Domain model: classical groups, branching pairs and dominant weights.

A group is identified by its family tag and defining size (n for GL(n),
2n for Sp(2n), p for SO(p)).  A branching pair couples a group with a
strictly smaller group of the same family and precomputes the three
quantities every formula downstream needs:

* ``delta``     -- the index gap in the interlacing condition
                   lambda_i >= mu_i >= lambda_{i+delta},
* ``root_mult`` -- the multiplicity with which each restricted root
                   occurs in the branching partition function (equal to
                   ``delta`` for every valid pair; kept separate because
                   the two arise from different definitions),
* ``two_exp``   -- the exponent of the power-of-two prefactor in front
                   of the branching determinant (nonzero only for
                   orthogonal pairs).

String encodings used by the CLI and serialised output:

    group   "GL:3" | "Sp:6" | "SO:7"
    pair    "<big>/<small>", e.g. "SO:7/SO:3"
    weight  comma separated integers, "2,1,0"; empty string for rank 0
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence


class BranchingError(Exception):
    """Base class for every domain error raised by this package."""


class InvalidGroup(BranchingError):
    """Family/size combination that does not name a classical group."""


class FamilyMismatch(BranchingError):
    """Branching pair across different families."""


class SizeOrder(BranchingError):
    """Subgroup size not strictly smaller than the ambient size."""


class NotDominant(BranchingError):
    """Weight entries negative or not non-increasing."""


class WrongLength(BranchingError):
    """Weight length differs from the rank of the intended group."""


class NonIntegerResult(BranchingError):
    """An exact computation produced a non-integer (or negative) value
    where an integer is forced.  Signals an implementation bug, never a
    valid-input outcome."""


class Family(enum.Enum):
    GL = "GL"
    SP = "Sp"
    SO = "SO"


@dataclass(frozen=True)
class ClassicalGroup:
    family: Family
    size: int

    @property
    def rank(self) -> int:
        # GL(n) has rank n; Sp(2n) rank n; SO(p) rank floor(p/2).
        if self.family is Family.GL:
            return self.size
        return self.size // 2

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0

    @property
    def so_odd(self) -> bool:
        return self.family is Family.SO and self.size % 2 == 1

    @property
    def so_even(self) -> bool:
        return self.family is Family.SO and self.size % 2 == 0

    def encode(self) -> str:
        return f"{self.family.value}:{self.size}"

    def __str__(self) -> str:
        return self.encode()


def make_group(family: Family | str, size: int) -> ClassicalGroup:
    """Validated constructor; family may be given as "GL"/"Sp"/"SO".

    Size 0 is accepted for every family and names the trivial group of
    rank 0 (as does SO(1)); Sp sizes must be even.
    """
    if isinstance(family, str):
        try:
            family = Family(family)
        except ValueError:
            raise InvalidGroup(f"unknown family {family!r}") from None
    if size < 0:
        raise InvalidGroup(f"negative size {size}")
    if family is Family.SP and size % 2 != 0:
        raise InvalidGroup(f"Sp size must be even, got {size}")
    return ClassicalGroup(family, size)


@dataclass(frozen=True)
class BranchPair:
    big: ClassicalGroup
    small: ClassicalGroup
    delta: int
    root_mult: int
    two_exp: int

    @property
    def n(self) -> int:
        return self.big.rank

    @property
    def m(self) -> int:
        return self.small.rank

    def encode(self) -> str:
        return f"{self.big.encode()}/{self.small.encode()}"

    def __str__(self) -> str:
        return self.encode()


def make_pair(big: ClassicalGroup, small: ClassicalGroup) -> BranchPair:
    """Couple two groups of the same family, small strictly inside big.

    The trivial subgroup (rank 0) is allowed for every family, so the
    degenerate branching "restriction to the identity" stays in scope and
    exercises the pure dimension formulas.
    """
    if big.family is not small.family:
        raise FamilyMismatch(f"{big} vs {small}")
    if small.size > big.size - 1:
        raise SizeOrder(f"need size({small}) < size({big})")
    n, m = big.rank, small.rank
    if big.family is Family.GL:
        delta = n - m
        root_mult = n - m
    elif big.family is Family.SP:
        delta = 2 * n - 2 * m
        root_mult = 2 * n - 2 * m
    else:
        delta = big.size - small.size
        # number of restricted short-root directions, by parity of the big size
        root_mult = (2 * n + 1 - small.size) if big.size % 2 else (2 * n - small.size)
    if big.so_odd:
        two_exp = n - m
    elif big.so_even:
        two_exp = n - m - 1 if n - m >= 1 else 0
    else:
        two_exp = 0
    return BranchPair(big, small, delta, root_mult, two_exp)


@dataclass(frozen=True)
class DominantWeight:
    """Non-increasing tuple of non-negative integers, one per rank.

    Weights are stored un-padded; ``part`` gives the zero-padded view
    that the determinant formulas index freely past the rank.
    """

    parts: tuple[int, ...]

    def part(self, i: int) -> int:
        """1-based entry, zero for every index beyond the stored length."""
        if i < 1:
            raise IndexError(f"weight index {i} < 1")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def nonzero_len(self) -> int:
        """Largest s with parts[s-1] != 0 (0 for the zero weight)."""
        for i in range(len(self.parts), 0, -1):
            if self.parts[i - 1] != 0:
                return i
        return 0

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return format_weight(self.parts)


def make_weight(group: ClassicalGroup, parts: Sequence[int]) -> DominantWeight:
    """Validate ``parts`` as a dominant weight of ``group``.

    Entries must be non-increasing and non-negative; length must equal
    the rank exactly (callers zero-pad themselves when they mean it).
    """
    pt = tuple(int(p) for p in parts)
    if len(pt) != group.rank:
        raise WrongLength(f"{group} has rank {group.rank}, weight has length {len(pt)}")
    for a, b in zip(pt, pt[1:]):
        if a < b:
            raise NotDominant(f"entries must be non-increasing: {pt}")
    if pt and pt[-1] < 0:
        raise NotDominant(f"entries must be non-negative: {pt}")
    return DominantWeight(pt)


# ---------------------------------------------------------------------------
# string encodings


def parse_group(text: str) -> ClassicalGroup:
    name, sep, size = text.partition(":")
    if not sep:
        raise ValueError(f"bad group {text!r}, expected e.g. 'SO:7'")
    try:
        family = Family(name)
    except ValueError:
        raise ValueError(f"unknown family {name!r} in {text!r}") from None
    try:
        sz = int(size)
    except ValueError:
        raise ValueError(f"bad size in {text!r}") from None
    return make_group(family, sz)


def parse_pair(text: str) -> BranchPair:
    big, sep, small = text.partition("/")
    if not sep:
        raise ValueError(f"bad pair {text!r}, expected e.g. 'SO:7/SO:3'")
    return make_pair(parse_group(big), parse_group(small))


def parse_weight(text: str) -> tuple[int, ...]:
    """Comma separated integers to a tuple; '' parses to the empty weight."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"bad weight {text!r}, expected e.g. '2,1,0'") from None


def format_weight(parts: Sequence[int]) -> str:
    return ",".join(str(p) for p in parts)
