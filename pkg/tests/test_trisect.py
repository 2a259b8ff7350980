import dataclasses

import pytest

from dihedral import trisect
from dihedral.trisect import EulerData, TrisectionError, TrisectionParams

from conftest import DATA


def test_central_genus_and_sectors():
    assert trisect.central_genus(3, 3) == 1
    assert trisect.sector_parameter(3, 2) == 0
    assert str(trisect.lift_trisection_params(3, 3, (1, 2, 2), singular_first=True)) == "(1;0,0,0)"


def test_euler_characteristic():
    assert trisect.euler_char_cover(EulerData(3, 2, 1)) == 3
    assert trisect.euler_char_cover(EulerData(3, 2, 0)) == 4
    assert trisect.euler_char_cover(EulerData(5, 2, 0)) == 6


def test_homotopy_cp2_constraint():
    # (p - 1)/2 * (2 + 2g - m) == 1 forces p = 3 and m = 2g + 1
    hits = [(p, g, m) for p in (3, 5, 7, 9) for g in range(4) for m in range(10)
            if trisect.homotopy_cp2_constraint(p, g, m)]
    assert hits and all(p == 3 and m == 2 * g + 1 for p, g, m in hits)


def test_central_surface_matches_genus():
    for p in (3, 5, 7):
        for b in range(1, 11):
            g = trisect.central_genus(p, b)
            assert trisect.central_surface_euler(p, b) == 2 - 2 * g


def test_invalid_params():
    with pytest.raises(TrisectionError, match="not surjective"):
        trisect.lift_trisection_params(3, 1, (1, 1, 1))
    with pytest.raises(TrisectionError):
        trisect.lift_trisection_params(4, 3, (1, 2, 2))
    with pytest.raises(TrisectionError):
        TrisectionParams(1, (2, 0, 0))
    with pytest.raises(TrisectionError):
        EulerData(2, 2, 1)


def test_six_one_triplane():
    d = trisect.load_triplane(DATA / "six_one.tri")
    rep = trisect.validate_triplane(d)
    by = {r.name: r for r in rep.closures}
    assert by["L1"].knot == "6_1"
    assert by["L1"].alexander == (2, -5, 2)
    assert by["L2"].status == by["L3"].status == "unlink"
    assert rep.chi_B == 2 and rep.surface == "sphere"
    assert str(rep.params) == "(1;0,0,0)"
    assert all(r.coloring_valid for r in rep.closures)


def test_color_mismatch():
    d = trisect.load_triplane(DATA / "six_one.tri")
    tangles = dict(d.tangles)
    tangles["C"] = trisect.Tangle((), (1, 1, 2, 2, 3, 3))
    with pytest.raises(TrisectionError, match="color mismatch between tangles A and C"):
        trisect.validate_triplane(dataclasses.replace(d, tangles=tangles))


def test_too_many_components_is_impossible():
    flat = trisect.Tangle((), (1, 1, 2, 2, 3, 3))
    d = trisect.TriPlaneDiagram(3, {"A": flat, "B": flat, "C": flat})
    rep = trisect.validate_triplane(d)
    assert rep.chi_B == 6
    assert rep.surface == "impossible"
    assert any("not a sphere" in n for n in rep.notes)


def test_trivial_coloring_is_noted():
    flat = trisect.Tangle((), (1,) * 6)
    rep = trisect.validate_triplane(trisect.TriPlaneDiagram(3, {"A": flat, "B": flat, "C": flat}))
    assert "coloring trivial" in rep.notes
