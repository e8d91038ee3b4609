import random

import pytest

from branchkit import (
    ScaleExceeded,
    decompose,
    fold_mirror_rows,
    make_group,
    make_pair,
    make_weight,
    parse_group,
    parse_pair,
    positive_roots,
    restrict_and_decompose,
    weight_multiplicities,
    weyl_dim_product,
)


def test_positive_root_counts():
    # GL(n): n(n-1)/2; Sp(2n)/SO(2n+1): n^2; SO(2n): n(n-1)
    assert len(positive_roots(parse_group("GL:4")).positives) == 6
    assert len(positive_roots(parse_group("Sp:6")).positives) == 9
    assert len(positive_roots(parse_group("SO:7")).positives) == 9
    assert len(positive_roots(parse_group("SO:6")).positives) == 6
    assert len(positive_roots(parse_group("SO:2")).positives) == 0
    assert len(positive_roots(parse_group("GL:0")).positives) == 0


def test_root_coordinates_frozen():
    roots = set(positive_roots(parse_group("SO:5")).positives)
    assert roots == {(1, -1), (1, 1), (1, 0), (0, 1)}
    roots = set(positive_roots(parse_group("Sp:4")).positives)
    assert roots == {(1, -1), (1, 1), (2, 0), (0, 2)}
    roots = set(positive_roots(parse_group("SO:4")).positives)
    assert roots == {(1, -1), (1, 1)}


def test_weights_adjoint_gl3():
    g = parse_group("GL:3")
    w = weight_multiplicities(g, make_weight(g, (2, 1, 0)))
    assert w[(1, 1, 1)] == 2
    assert w[(2, 1, 0)] == 1
    assert w[(0, 1, 2)] == 1
    assert sum(w.values()) == 8
    assert all(sum(k) == 3 for k in w)


def test_weights_vector_reps():
    g = parse_group("SO:5")
    w = weight_multiplicities(g, make_weight(g, (1, 0)))
    assert w == {(1, 0): 1, (0, 1): 1, (0, 0): 1, (0, -1): 1, (-1, 0): 1}
    g = parse_group("Sp:4")
    w = weight_multiplicities(g, make_weight(g, (1, 1)))
    assert w == {(1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 1, (0, 0): 1}


def test_weights_even_orthogonal_frozen():
    # SO:6 highest weight (1,1,1), dimension 10: four corner weights with
    # an even number of minus signs plus all +-e_i, each once.  Sign
    # parity is only rigid off the coordinate hyperplanes; a zero
    # coordinate lets the Weyl group flip any single sign.
    g = parse_group("SO:6")
    w = weight_multiplicities(g, make_weight(g, (1, 1, 1)))
    corners = {(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)}
    axes = {tuple(s if i == j else 0 for j in range(3)) for s in (1, -1) for i in range(3)}
    assert w == {k: 1 for k in corners | axes}
    assert sum(w.values()) == weyl_dim_product(g, make_weight(g, (1, 1, 1))) == 10


def test_weight_mass_equals_dimension():
    rng = random.Random(31)
    for _ in range(25):
        enc = rng.choice(["GL:2", "GL:3", "GL:4", "Sp:4", "Sp:6", "SO:5", "SO:7", "SO:6", "SO:8"])
        g = parse_group(enc)
        parts = tuple(sorted((rng.randint(0, 3) for _ in range(g.rank)), reverse=True))
        lam = make_weight(g, parts)
        w = weight_multiplicities(g, lam, max_dim=None)
        assert sum(w.values()) == weyl_dim_product(g, lam), (enc, parts)


def test_weights_invariant_under_coordinate_symmetry():
    # permuting coordinates and flipping sign pairs preserves multiplicity
    g = parse_group("SO:7")
    lam = make_weight(g, (2, 1, 0))
    w = weight_multiplicities(g, lam)
    rng = random.Random(43)
    keys = sorted(w)
    for _ in range(60):
        k = list(rng.choice(keys))
        rng.shuffle(k)
        if rng.random() < 0.5:
            k[rng.randrange(3)] *= -1  # SO(odd): single sign flips allowed
        assert w.get(tuple(k)) == w[tuple(sorted(map(abs, k), reverse=True))]


def test_scale_cap():
    pair = parse_pair("SO:9/SO:5")
    lam = make_weight(pair.big, (3, 1, 0, 0))  # dim 910
    with pytest.raises(ScaleExceeded):
        restrict_and_decompose(pair, lam, max_dim=100)
    g = parse_group("SO:9")
    with pytest.raises(ScaleExceeded):
        weight_multiplicities(g, make_weight(g, (3, 1, 0, 0)), max_dim=100)
    # None disables the cap
    table = restrict_and_decompose(pair, lam, max_dim=None)
    assert sum(c for _, c in table.rows) > 0


GOLDEN_INPUTS = [
    ("Sp:6/Sp:2", (2, 1, 0)),
    ("SO:7/SO:3", (2, 1, 0)),
    ("SO:6/SO:2", (2, 1, 0)),
    ("SO:6/SO:3", (2, 1, 0)),
    ("SO:7/SO:2", (2, 1, 0)),
    ("GL:3/GL:1", (2, 1, 0)),
    ("Sp:8/Sp:4", (3, 1, 0, 0)),
    ("SO:9/SO:5", (3, 1, 0, 0)),
    ("SO:8/SO:4", (3, 1, 0, 0)),
]


@pytest.mark.parametrize("enc,lam_parts", GOLDEN_INPUTS)
def test_oracle_agrees_with_determinant_on_goldens(enc, lam_parts):
    pair = parse_pair(enc)
    lam = make_weight(pair.big, lam_parts)
    raw = restrict_and_decompose(pair, lam)
    folded = dict(fold_mirror_rows(pair, raw.rows))
    assert folded == decompose(pair, lam).as_dict()


def test_oracle_signed_rows_for_even_orthogonal_subgroup():
    pair = parse_pair("SO:6/SO:4")
    lam = make_weight(pair.big, (1, 1, 1))
    raw = restrict_and_decompose(pair, lam).as_dict()
    # mirror constituents carry opposite last coordinates, equal counts
    assert raw[(1, 1)] == raw[(1, -1)] == 1
    folded = dict(fold_mirror_rows(pair, tuple(raw.items())))
    assert folded[(1, 1)] == 1
    assert all(mu[-1] >= 0 for mu in folded)


def test_fold_mirror_rows_validation():
    pair = parse_pair("SO:6/SO:4")
    with pytest.raises(ValueError):
        fold_mirror_rows(pair, (((1, 1), 2), ((1, -1), 1)))
    with pytest.raises(ValueError):
        fold_mirror_rows(pair, (((1, -1), 1),))
    # non-even-orthogonal subgroups pass through, sorted
    pair = parse_pair("Sp:6/Sp:4")
    rows = (((0, 0), 5), ((2, 1), 7))
    assert fold_mirror_rows(pair, rows) == (((2, 1), 7), ((0, 0), 5))


def test_oracle_random_agreement():
    rng = random.Random(20260816)
    checked = 0
    while checked < 30:
        fam = rng.choice(["GL", "Sp", "SO"])
        if fam == "GL":
            big = rng.randint(2, 4)
            small = rng.randint(0, big - 1)
        elif fam == "Sp":
            big = 2 * rng.randint(1, 4)
            small = 2 * rng.randint(0, big // 2 - 1)
        else:
            big = rng.randint(3, 8)
            small = rng.randint(1, big - 1)
        pair = make_pair(make_group(fam, big), make_group(fam, small))
        parts = tuple(sorted((rng.randint(0, 3) for _ in range(pair.n)), reverse=True))
        lam = make_weight(pair.big, parts)
        try:
            raw = restrict_and_decompose(pair, lam)
        except ScaleExceeded:
            continue
        folded = dict(fold_mirror_rows(pair, raw.rows))
        assert folded == decompose(pair, lam).as_dict(), (pair.encode(), parts)
        checked += 1
