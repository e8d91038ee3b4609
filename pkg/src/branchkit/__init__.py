"""Exact branching multiplicities for classical group pairs.

The package computes how an irreducible representation of GL(n), Sp(2n),
or SO(p) splits over a subgroup of the same family acting on a smaller
set of coordinates.  Every multiplicity is one determinant of binomial
coefficients, evaluated in exact arithmetic; an independent character
oracle (Freudenthal recursion plus greedy highest-weight peeling) is
included so the two routes can be compared on any input.
"""

from .branching import (
    BadRankWindow,
    CompareReport,
    MultiplicityTable,
    WrongCorank,
    branch_determinant,
    compare_pairs,
    decompose,
    dimension_sum,
    interlaces,
    iter_dominant,
    multiplicity,
    product_formula,
    support,
)
from .combinatorics import binom_ext, binom_trunc, partition_value
from .core import (
    BranchingError,
    BranchPair,
    ClassicalGroup,
    DominantWeight,
    Family,
    FamilyMismatch,
    InvalidGroup,
    NonIntegerResult,
    NotDominant,
    SizeOrder,
    WrongLength,
    format_weight,
    make_group,
    make_pair,
    make_weight,
    parse_group,
    parse_pair,
    parse_weight,
)
from .detkit import build_branch_matrix, det_exact, det_fraction_gauss, shift_table
from .oracle import (
    DEFAULT_MAX_DIM,
    NegativeRemainder,
    ScaleExceeded,
    fold_mirror_rows,
    positive_roots,
    restrict_and_decompose,
    weight_multiplicities,
)
from .weyl import rho, weyl_dim_det, weyl_dim_product

__version__ = "0.1.0"

__all__ = [
    "BadRankWindow",
    "BranchPair",
    "BranchingError",
    "ClassicalGroup",
    "CompareReport",
    "DEFAULT_MAX_DIM",
    "DominantWeight",
    "Family",
    "FamilyMismatch",
    "InvalidGroup",
    "MultiplicityTable",
    "NegativeRemainder",
    "NonIntegerResult",
    "NotDominant",
    "ScaleExceeded",
    "SizeOrder",
    "WrongCorank",
    "WrongLength",
    "binom_ext",
    "binom_trunc",
    "branch_determinant",
    "build_branch_matrix",
    "compare_pairs",
    "decompose",
    "det_exact",
    "det_fraction_gauss",
    "dimension_sum",
    "fold_mirror_rows",
    "format_weight",
    "interlaces",
    "iter_dominant",
    "make_group",
    "make_pair",
    "make_weight",
    "multiplicity",
    "parse_group",
    "parse_pair",
    "parse_weight",
    "partition_value",
    "positive_roots",
    "product_formula",
    "restrict_and_decompose",
    "rho",
    "shift_table",
    "support",
    "weight_multiplicities",
    "weyl_dim_det",
    "weyl_dim_product",
]
