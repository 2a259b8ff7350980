import itertools

import pytest

from dihedral import diagram
from dihedral.diagram import DiagramError, parse_diagram_code

TREFOIL = """
[alpha]
f = 2 0 1
eps = + + +
t = k k k
c = 1 2 3
"""


def brute_force_colorings(code, p):
    out = []
    for cols in itertools.product(range(1, p + 1), repeat=code.m):
        if diagram.validate_coloring(code.with_colors(cols), p).valid:
            out.append(cols)
    return out


def test_parse_trefoil():
    code = parse_diagram_code(TREFOIL)
    assert code.m == 3
    assert code.alpha_eps == (1, 1, 1)
    assert diagram.validate_coloring(code, 3).nontrivial


def test_six_one_fixture_coloring(six_one):
    rep = diagram.validate_coloring(six_one.code, 3)
    assert rep.valid and rep.nontrivial
    assert list(six_one.code.curves) == ["beta_l", "beta_r"]


@pytest.mark.parametrize("text, message", [
    ("[alpha]\nf = 2 0\neps = + + +\nt = k k k\nc = 1 2 3\n", "length mismatch"),
    ("[alpha]\nf = 5 0 1\neps = + + +\nt = k k k\nc = 1 2 3\n", "out-of-range"),
    ("[alpha]\nf = 2 0 1\neps = + + +\nt = k q k\nc = 1 2 3\n", "unknown tag"),
    ("[alpha]\nf = 2 0 1\neps = + + +\nt = k p k\nc = 1 2 3\n", "no auxiliary curve"),
    ("[alpha]\nf =\neps =\nt =\nc =\n", "empty diagram"),
    ("f = 1\n", "outside of a section"),
])
def test_malformed_codes(text, message):
    with pytest.raises(DiagramError, match=message):
        parse_diagram_code(text)


def test_json_mirror_matches_text():
    text_code = parse_diagram_code(TREFOIL)
    json_code = parse_diagram_code(
        '{"alpha": {"f": [2, 0, 1], "eps": ["+", "+", "+"], "t": ["k", "k", "k"], "c": [1, 2, 3]}}',
        "json")
    assert text_code == json_code


def test_bad_coloring_is_reported():
    code = parse_diagram_code(TREFOIL).with_colors((1, 1, 2))
    rep = diagram.validate_coloring(code, 3)
    assert not rep.valid
    assert rep.violations


def test_enumeration_matches_brute_force():
    code = parse_diagram_code(TREFOIL)
    got = sorted(c.colors for c in diagram.enumerate_colorings(code, 3))
    assert got == brute_force_colorings(code, 3)


def test_six_one_colorings(six_one):
    cols = diagram.enumerate_colorings(six_one.code, 3)
    assert len(cols) == 9
    nontrivial = [c for c in cols if c.nontrivial]
    assert len(diagram.equivalence_classes(nontrivial)) == 1
    assert six_one.code.alpha_c in {c.colors for c in cols}


def test_determinant_from_form():
    assert diagram.determinant_from_form([[-2, 1], [1, 4]]) == 9


def test_mirror_flips_every_sign(six_one):
    m = six_one.code.mirror()
    assert m.alpha_eps == tuple(-e for e in six_one.code.alpha_eps)
    assert m.mirror() == six_one.code
