import random

import pytest

from dihedral import links


def test_alexander_polynomials():
    assert links.closed_braid_link((1, 1, 1), 2).alexander_polynomial() == (1, -1, 1)
    assert links.closed_braid_link((1, -2, 1, -2), 3).alexander_polynomial() == (1, -3, 1)


def test_split_link_determinant_is_zero():
    assert links.plat_link((-3,), 4).determinant() == 0


@pytest.mark.parametrize("word, name", [
    ((2, 2, 2), "3_1"),
    ((2, -1, 2, 2), "4_1"),
    ((2,), "unknot"),
])
def test_four_plat_names(word, name):
    assert links.name_two_bridge(links.four_plat_fraction(word)) == name


def test_two_bridge_determinant_matches_fraction():
    rng = random.Random(3)
    for _ in range(300):
        w = tuple(rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(rng.randint(1, 8)))
        link = links.plat_link(w, 4)
        if link.n_components != 1:
            continue
        p, _ = links.four_plat_fraction(w)
        assert abs(link.determinant()) == p


def test_plat_unknot_certified():
    assert links.certify_unlink((2, -2), 4, 2) == "unlink"
    assert links.certify_unlink((2, 2, 2), 4, 1) == "not an unlink"


def test_cap_color_propagation():
    cols, ok = links.tangle_cap_colors((), 4, (1, 1, 2, 2), 3)
    assert ok
    _, ok = links.tangle_cap_colors((), 4, (1, 2, 2, 2), 3)
    assert not ok
