import dataclasses
from fractions import Fraction

import pytest

from dihedral import defect, pipeline, seifert
from dihedral.defect import AnchorPath, DefectError, Monodromy
from dihedral.diagram import DiagramError

REFERENCE_ALPHA_MATRIX = [
    [-2, 2, -2, 2, 0],
    [2, -1, 3, 1, -3],
    [-2, 3, -3, -5, -1],
    [2, 1, -5, -2, 0],
    [0, -3, -1, 0, -1],
]


def test_monodromy_of_six_one_anchor(six_one):
    m = defect.monodromy(six_one.anchors["beta_l"], six_one.code)
    assert str(m) == "(123)"
    assert m.evaluate(1) == 3
    assert str(defect.monodromy(six_one.anchors["beta_r"], six_one.code)) == "Id"


def test_monodromy_algebra():
    m = Monodromy.from_colors((1, 2))
    assert Monodromy.from_colors((1, 1)) == Monodromy.identity()
    assert m.inverse().inverse() == m
    assert all(m(m.inverse()(s)) == s for s in (1, 2, 3))
    with pytest.raises(DefectError):
        Monodromy((1, 1, 2))


def test_anchor_arcs_need_a_diagram():
    with pytest.raises(DefectError, match="needs a diagram"):
        AnchorPath("w", (1, 2)).colors()


def test_anchor_arc_out_of_range(six_one):
    with pytest.raises(DefectError, match="invalid arc"):
        AnchorPath("w", (99,)).colors(six_one.code)


def test_kernel_selection_rule():
    monos = {
        "gamma_r": Monodromy.identity(),
        "gamma_l": Monodromy.from_colors((2,)),      # 1 -> 3
        "w": Monodromy.from_colors(()),
        "v": Monodromy.from_colors((2,)),
    }
    sel = defect.select_kernel_curves(monos, 1, ["w", "v"])
    assert sel.beta == (1, 2)
    assert sel.omegas == {"w": (2, 3), "v": (1, 2)}


def test_equal_push_off_lifts_rejected():
    monos = {"gamma_r": Monodromy.identity(), "gamma_l": Monodromy.identity()}
    with pytest.raises(DefectError, match="same lift"):
        defect.select_kernel_curves(monos, 1, [])


def test_missing_block():
    sel = defect.KernelSelection({"w": (1, 2)}, (1, 2))
    with pytest.raises(DefectError, match="missing linking block"):
        defect.assemble_kernel_matrix({("w", "w"): [[0] * 3] * 3}, sel)


def test_signature_requires_symmetry():
    with pytest.raises(DefectError):
        defect.signature([[1, 2], [0, 1]])


def test_compute_defect_terms():
    rep = defect.compute_defect(3, 3, 0, 1)
    assert rep.term_selflink == Fraction(4, 3)
    assert rep.xi == Fraction(7, 3)
    assert rep.warnings           # non-integer total is flagged
    assert defect.compute_defect(3, 0, -2, 1).xi == -1


def test_ribbon_check():
    assert not defect.ribbon_obstruction_check(1, 3).obstructed
    assert defect.ribbon_obstruction_check(3, 5).obstructed
    assert not defect.ribbon_obstruction_check(2, 5).obstructed


def test_cover_signature():
    assert defect.cover_signature(0, 3, 0, 1) == 1
    assert defect.cover_signature(1, 3, 4, -1) == 0


def test_six_one_pipeline(six_one):
    r = pipeline.run_defect(six_one)
    assert r.characteristic_knots == [(1, -1)]
    assert r.kernel_matrix == [[1]]
    assert r.sigma_w == 1
    assert abs(r.report.xi) == 1


def test_mirror_negates(six_one):
    L = six_one.form.L
    mirrored = dataclasses.replace(
        six_one, code=six_one.code.mirror(),
        form=seifert.SeifertForm([[-L[j][i] for j in range(2)] for i in range(2)]))
    r = pipeline.run_defect(mirrored)
    assert r.blocks[("beta", "beta")] == [[0, 0, -1], [0, -1, 0], [-1, 0, 0]]
    assert r.sigma_w == -1
    assert r.report.xi == -1


def test_only_p3(six_one):
    with pytest.raises(DefectError, match="p = 3"):
        pipeline.run_defect(six_one, p=5)


def test_trivial_coloring_is_rejected(six_one):
    flat = dataclasses.replace(six_one, code=six_one.code.with_colors((1,) * six_one.code.m))
    with pytest.raises(DefectError, match="coloring trivial"):
        pipeline.run_defect(flat)


def test_stated_self_linking_must_agree(six_one):
    with pytest.raises(DiagramError, match="disagrees"):
        pipeline.run_defect(dataclasses.replace(six_one, self_link=5))


def test_alpha_reference_matrix(alpha_11):
    r = pipeline.run_defect(alpha_11, resolution="left")
    assert r.kernel_matrix == REFERENCE_ALPHA_MATRIX
    assert r.sigma_w == -1
    assert abs(r.report.xi) == 1


def test_alpha_other_resolution(alpha_11):
    r = pipeline.run_defect(alpha_11, resolution="right")
    assert r.kernel_matrix != REFERENCE_ALPHA_MATRIX
    assert r.sigma_w == -1


def test_table_transpose_pairing(alpha_11):
    pairing = defect.transpose_pairing(alpha_11.blocks)
    changed = {k: v for k, v in pairing.items() if v is not None}
    assert set(changed) == {("omega2", "omega4"), ("omega3", "omega4")}
    assert all(is_perm for _, is_perm in changed.values())


def test_table_transfer_defect(alpha_11):
    bad = defect.transfer_defects(alpha_11.blocks)
    assert set(bad) == {("beta", "omega2"), ("omega2", "beta")}


def test_correcting_the_table_entry_keeps_signature(alpha_11):
    blocks = dict(alpha_11.blocks)
    fixed = [row[:] for row in blocks[("omega2", "beta")]]
    fixed[1][0] = -fixed[1][0]
    blocks[("omega2", "beta")] = fixed
    blocks[("beta", "omega2")] = [list(r) for r in zip(*fixed)]
    assert not defect.transfer_defects(blocks)
    r = pipeline.run_defect(dataclasses.replace(alpha_11, blocks=blocks))
    assert r.sigma_w == -1
