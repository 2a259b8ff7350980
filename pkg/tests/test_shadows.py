import itertools
import random

import pytest

from dihedral import shadows
from dihedral.shadows import (ShadowError, ShadowWord, TorusCurveClass, identify_genus_one,
                              lift_shadow_word, parse_shadow_word)

from reference_lifts import REFERENCE_LIFTS, expand


def test_parse_plain_and_grouped():
    w = parse_shadow_word("y2 (x1 y1)^2 x3")
    assert w.letters == ("y2", "x1", "y1", "x1", "y1", "x3")
    assert not w.lifted
    assert parse_shadow_word("y2 (x1 y1 y2 x2 y1 y2)^3i", i=2) == shadows.b_family_word(12)


def test_parse_latex_lifted():
    w = parse_shadow_word(r"y_2^2\left((x_1^1y_1^1)\right)^2")
    assert w.letters == ("y2", "x1", "y1", "x1", "y1")
    assert w.sheets == (2, 1, 1, 1, 1)


@pytest.mark.parametrize("text", ["y2 w1", "y4", "(y2", "y2)", "y2 (x1)^k", "z1"])
def test_parse_errors(text):
    with pytest.raises(ShadowError):
        parse_shadow_word(text)


def test_mixed_sheets_rejected():
    with pytest.raises(ShadowError, match="every letter"):
        parse_shadow_word("y2^2 x1")


def test_unknown_letter_in_word():
    with pytest.raises(ShadowError, match="unknown letter"):
        ShadowWord(("y2", "q1"))


def test_b0_lifts():
    w = shadows.b_family_word(0)
    assert str(lift_shadow_word(w, 2)) == "y2^2"
    assert str(lift_shadow_word(w, 3)) == "y2^3"


@pytest.mark.parametrize("i", [0, 1, 2, 3])
@pytest.mark.parametrize("family, offset", [("6i", 0), ("6i+3", 3)])
def test_reference_family_lifts(family, offset, i):
    w = shadows.b_family_word(6 * i + offset)
    for sheet, ref in zip((2, 3), REFERENCE_LIFTS[family]):
        assert lift_shadow_word(w, sheet).latex() == expand(ref, i)


def test_consecutive_lifts_differ_by_one_period():
    prev = None
    for i in range(4):
        cur = lift_shadow_word(shadows.b_family_word(6 * i), 2).latex()
        if prev is not None:
            assert cur.startswith(prev)
            block = cur[len(prev):]
            assert block.count("^") == 18
            assert block == expand(REFERENCE_LIFTS["6i"][0], 1)[len("y_2^2"):]
        prev = cur


def test_lift_of_lifted_word_uses_projection():
    w = lift_shadow_word(shadows.b_family_word(6), 2)
    assert lift_shadow_word(w, 2) == w


def test_bad_start_sheet():
    with pytest.raises(ShadowError):
        lift_shadow_word(shadows.b_family_word(0), 4)


def test_b_family_requires_multiple_of_three():
    with pytest.raises(ShadowError):
        shadows.b_family_word(4)


def _random_word(rng, n):
    return ShadowWord(tuple(rng.choice(shadows.LETTERS) for _ in range(n)))


def test_lifts_project_and_chain_up():
    rng = random.Random(11)
    for _ in range(200):
        w = _random_word(rng, 2 * rng.randint(1, 10))
        paths = {s: shadows.lift_path(w, s) for s in (1, 2, 3)}
        for s, path in paths.items():
            assert path.word.projection() == w
            assert path.end[0] == "D"
        # chaining the lifts along the orbits uses every lift exactly once
        used = set()
        for s in (1, 2, 3):
            t = s
            while t not in used:
                used.add(t)
                t = paths[t].end[1]
        assert used == {1, 2, 3}
        assert sorted(p.end[1] for p in paths.values()) == [1, 2, 3]


def test_equivariance_under_relabeling():
    rng = random.Random(5)
    ids = shadows.DEFAULT_IDENTIFICATIONS
    for tau in itertools.permutations((1, 2, 3)):
        conj = shadows.conjugate_identifications(ids, tau)
        for _ in range(20):
            w = _random_word(rng, rng.randint(1, 15))
            s = rng.randint(1, 3)
            a = lift_shadow_word(w, s, ids)
            b = lift_shadow_word(w, tau[s - 1], conj)
            assert b.sheets == tuple(tau[x - 1] for x in a.sheets)


def test_meridian_status():
    assert shadows.meridian_status((1, 2, 3)) == ("meridian",) * 3
    assert shadows.meridian_status((1, 1, 2)) == ("meridian", "meridian", "nullhomotopic")
    assert shadows.meridian_status((3, 1, 3)) == ("meridian", "nullhomotopic", "meridian")
    with pytest.raises(ShadowError, match="not surjective"):
        shadows.meridian_status((1, 1, 1))


def test_torus_complex_is_a_torus():
    T = shadows.TorusComplex()
    assert T.rank == 2
    assert len(T.loops) == 12          # two lifts over each of the six branch points
    # every lifted branch-point loop is a boundary
    for steps in T.loops.values():
        assert T.homology_class(T.chain(steps)) == (0, 0)


@pytest.mark.parametrize("start, end", [("e", "a"), ("e", "b"), ("f", "a"), ("f", "b")])
def test_closed_shadow_class_is_periodic(start, end):
    T = shadows.TorusComplex()
    for offset in (0, 3):
        base = shadows.closed_shadow_class(shadows.b_family_word(offset), start, end, complex_=T)
        for i in (1, 2, 3):
            w = shadows.b_family_word(6 * i + offset)
            assert shadows.closed_shadow_class(w, start, end, complex_=T) == base


def test_endpoints_must_meet_the_lifts():
    with pytest.raises(ShadowError, match="do not meet"):
        shadows.closed_shadow_class(shadows.b_family_word(0), "e", "c")


def test_identify_genus_one_table():
    a, b = TorusCurveClass(1, 0), TorusCurveClass(0, 1)
    c = TorusCurveClass(-1, -1)
    assert identify_genus_one(a, b, c) in ("CP2", "CP2_BAR")
    assert identify_genus_one(a, b, c) != identify_genus_one(b, a, c)
    assert identify_genus_one(a, b, b) == "S4"
    assert identify_genus_one(a, a, a) == "S1xS3"
    assert identify_genus_one(a, TorusCurveClass(1, 2), TorusCurveClass(1, 3)) == "other"


def test_standard_diagram_orientation():
    # standard genus-one diagrams: slopes 0, infinity, 1 for CP2 and 0, infinity, -1 for its mirror
    a, b = TorusCurveClass(1, 0), TorusCurveClass(0, 1)
    assert identify_genus_one(a, b, TorusCurveClass(1, 1)) == "CP2"
    assert identify_genus_one(a, b, TorusCurveClass(-1, -1)) == "CP2"    # curve orientation is irrelevant
    assert identify_genus_one(a, b, TorusCurveClass(1, -1)) == "CP2_BAR"


def test_class_validation():
    with pytest.raises(ShadowError, match="not primitive"):
        TorusCurveClass(2, 4)
    with pytest.raises(ShadowError, match="null-homologous"):
        identify_genus_one(TorusCurveClass(0, 0), TorusCurveClass(1, 0), TorusCurveClass(0, 1))


def test_word_file(tmp_path):
    f = tmp_path / "w.word"
    f.write_text("word = y2 (x1 y1 y2 x2 y1 y2)^3i\ni = 1\n")
    assert shadows.read_word_file(f) == shadows.b_family_word(6)
