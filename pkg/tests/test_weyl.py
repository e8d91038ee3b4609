from fractions import Fraction

import pytest

from branchkit import (
    WrongLength,
    iter_dominant,
    make_group,
    make_weight,
    parse_group,
    rho,
    weyl_dim_det,
    weyl_dim_product,
)


def test_rho_frozen():
    assert rho(parse_group("GL:3")) == (2, 1, 0)
    assert rho(parse_group("Sp:6")) == (3, 2, 1)
    assert rho(parse_group("SO:7")) == (
        Fraction(5, 2),
        Fraction(3, 2),
        Fraction(1, 2),
    )
    assert rho(parse_group("SO:6")) == (2, 1, 0)
    assert rho(parse_group("GL:0")) == ()


DIM_CASES = [
    ("GL:3", (2, 1, 0), 8),
    ("Sp:6", (2, 1, 0), 64),
    ("SO:7", (2, 1, 0), 105),
    ("SO:6", (2, 1, 0), 64),
    ("SO:5", (1, 0), 5),
    ("GL:4", (3, 1, 0, 0), 45),
    ("Sp:8", (3, 1, 0, 0), 594),
    ("SO:9", (3, 1, 0, 0), 910),
    ("SO:8", (3, 1, 0, 0), 567),
]


@pytest.mark.parametrize("enc,parts,dim", DIM_CASES)
def test_dim_frozen(enc, parts, dim):
    g = parse_group(enc)
    lam = make_weight(g, parts)
    assert weyl_dim_product(g, lam) == dim
    assert weyl_dim_det(g, lam) == dim


def test_dim_vector_representations():
    # the defining representation has dimension equal to the group size
    for enc in ("GL:2", "GL:5", "Sp:4", "Sp:8", "SO:5", "SO:7", "SO:6", "SO:8"):
        g = parse_group(enc)
        lam = make_weight(g, (1,) + (0,) * (g.rank - 1))
        assert weyl_dim_product(g, lam) == g.size


def test_dim_trivial_cases():
    for enc in ("GL:0", "SO:1", "Sp:0"):
        g = parse_group(enc)
        assert weyl_dim_product(g, make_weight(g, ())) == 1
        assert weyl_dim_det(g, make_weight(g, ())) == 1
    for enc in ("GL:3", "Sp:6", "SO:7", "SO:6"):
        g = parse_group(enc)
        zero = make_weight(g, (0,) * g.rank)
        assert weyl_dim_product(g, zero) == 1
        assert weyl_dim_det(g, zero) == 1


def test_dim_det_equals_product_window():
    for rank in range(1, 5):
        groups = [
            make_group("GL", rank),
            make_group("Sp", 2 * rank),
            make_group("SO", 2 * rank + 1),
            make_group("SO", 2 * rank),
        ]
        for g in groups:
            for parts in iter_dominant(rank, 3):
                lam = make_weight(g, parts)
                assert weyl_dim_product(g, lam) == weyl_dim_det(g, lam), (g, parts)


def test_dim_length_check():
    g = parse_group("SO:7")
    with pytest.raises(WrongLength):
        weyl_dim_product(g, make_weight(parse_group("SO:5"), (1, 0)))
