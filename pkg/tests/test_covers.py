import time

import pytest

from dihedral import covers
from dihedral.covers import CoverError
from dihedral.diagram import CURVE

from conftest import random_colored_link


def test_six_one_block(six_one):
    block = covers.linking_block(six_one.code, "beta_l", "beta_r")
    assert block.entries == ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def test_six_one_block_is_fast(six_one):
    t = time.perf_counter()
    covers.linking_block(six_one.code, "beta_l", "beta_r")
    assert time.perf_counter() - t < 1.0


def test_single_entry(six_one):
    assert covers.linking_number(six_one.code, "beta_r", 1, 3) == 1
    assert covers.linking_number(six_one.code, "beta_r", 1, 1) == 0


def test_unknown_curve(six_one):
    with pytest.raises(CoverError, match="unknown curve"):
        covers.linking_block(six_one.code, "gamma", "beta_r")


def test_second_curve_cannot_play_g(six_one):
    with pytest.raises(CoverError, match="first auxiliary curve"):
        covers.linking_block(six_one.code, "beta_r", "beta_l")


def test_cover_sheets(six_one):
    cover = covers.build_cover(six_one.code, 3)
    assert cover.p == 3
    assert cover.act(0, 1) == 1          # arc 0 has color 1, fixing sheet 1


@pytest.mark.parametrize("seed", range(6))
def test_row_and_column_sums_are_downstairs_linking(seed):
    found = random_colored_link(1000 + seed)
    assert found is not None
    _, _, code = found
    B = covers.linking_block(code, "c1", "c2").entries
    h = code.curves["c2"]
    lk = sum(e for e, t in zip(h.eps, h.t) if t == CURVE)
    assert {sum(r) for r in B} == {lk}
    assert {sum(c) for c in zip(*B)} == {lk}
