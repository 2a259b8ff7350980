"""
Linking numbers of lifts of curves in the irregular dihedral branched
cover of S^3 along a Fox-colored knot.

The cover is handled through homology.  The knot together with its first
auxiliary curve ``g`` gives a Wirtinger presentation of the complement;
the coloring sends a knot meridian to the reflection fixing its color and
a ``g`` meridian to the identity.  Lifting the presentation complex to the
p sheets and filling the branch meridians yields H_1 of the branched cover
minus the lifts of ``g``.  Filling back every lift except ``g^j`` leaves
H_1(M - g^j; Q) = Q (when M is a rational homology sphere), generated by
the meridian of ``g^j``, and the class of a lift ``h^k`` there is
lk(g^j, h^k) times that meridian.

Sheet ``j`` of a lift is the sheet holding its zeroth arc.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .diagram import CURVE, KNOT, DiagramError, reflect, validate_coloring


class CoverError(ValueError):
    pass


# Orientation conventions.  A crossing of sign eps conjugates the incoming
# under-arc generator by the over-arc generator to the power
# WIRTINGER_SIGN * eps, and a curve passing under an arc with sign eps
# picks up that arc's generator to the power LETTER_SIGN * eps.
WIRTINGER_SIGN = -1
LETTER_SIGN = 1


@dataclass(frozen=True)
class CoverCellStructure:
    """Sheet bookkeeping for the p-fold cover determined by a coloring."""
    p: int
    colors: tuple
    # lift_sheets[name][j-1] = sheet of every arc along the lift starting in sheet j
    lift_sheets: dict = field(default_factory=dict)

    def act(self, arc, sheet):
        return reflect(self.colors[arc], sheet, self.p)


@dataclass(frozen=True)
class LinkingBlock:
    entries: tuple
    curve_g: str
    curve_h: str
    resolution: str = "left"

    def transpose(self):
        return LinkingBlock(tuple(zip(*self.entries)), self.curve_h, self.curve_g, self.resolution)

    def as_lists(self):
        return [list(r) for r in self.entries]


def _curve_sheets(code, curve, colors, p, start):
    """Sheet of every arc of ``curve`` along the lift that starts in ``start``."""
    sheets = []
    s = start
    for i in range(len(curve)):
        sheets.append(s)
        if curve.t[i] == KNOT:
            s = reflect(colors[curve.f[i]], s, p)
    return sheets, s


def build_cover(code, p=3):
    """Sheet assignments of every lift of every auxiliary curve."""
    report = validate_coloring(code, p)
    if not report.valid:
        raise CoverError(f"invalid coloring: {report.violations}")
    if not report.nontrivial:
        raise CoverError("coloring trivial")
    lifts = {}
    for name, curve in code.curves.items():
        per = []
        for j in range(1, p + 1):
            sheets, end = _curve_sheets(code, curve, code.alpha_c, p, j)
            if end != j:
                raise CoverError(f"lift {j} of curve {name!r} does not close up")
            per.append(tuple(sheets))
        lifts[name] = tuple(per)
    return CoverCellStructure(p, tuple(code.alpha_c), lifts)


class _Presentation:
    """Wirtinger presentation of the knot plus g, with the coloring action."""

    def __init__(self, code, p):
        self.code = code
        self.p = p
        self.m = code.m
        g = code.g
        self.n = len(g)
        self.ngen = self.m + self.n
        self.relators = []
        self._add_component(code.alpha_f, code.alpha_eps, code.alpha_t, 0, self.m)
        self._add_component(g.f, g.eps, g.t, self.m, self.n)

    def gen(self, tag, idx):
        return idx if tag == KNOT else self.m + idx

    def _add_component(self, f, eps, t, offset, length):
        for i in range(length):
            z = self.gen(t[i], f[i])
            e = WIRTINGER_SIGN * eps[i]
            x_in, x_out = offset + i, offset + (i + 1) % length
            # x_out = z^e x_in z^-e
            self.relators.append([(z, e), (x_in, 1), (z, -e), (x_out, -1)])

    def act(self, gen, sheet):
        if gen < self.m:
            return reflect(self.code.alpha_c[gen], sheet, self.p)
        return sheet

    def edge(self, gen, sheet):
        return gen * self.p + (sheet - 1)

    @property
    def nedges(self):
        return self.ngen * self.p

    def lift(self, word, start):
        """Edge vector of the lift of ``word`` beginning in ``start``; returns (vector, end)."""
        vec = [0] * self.nedges
        s = start
        for gen, e in word:
            if e > 0:
                vec[self.edge(gen, s)] += 1
                s = self.act(gen, s)
            else:
                s = self.act(gen, s)  # every generator acts by an involution
                vec[self.edge(gen, s)] -= 1
        return vec, s


def curve_word(code, curve):
    """Word in the Wirtinger generators read off by a curve passing under arcs."""
    pres_m = code.m
    word = []
    for i in range(len(curve)):
        gen = curve.f[i] if curve.t[i] == KNOT else pres_m + curve.f[i]
        word.append((gen, LETTER_SIGN * curve.eps[i]))
    return word


def _base_relations(pres):
    """Lifted relators and filled branch meridians."""
    p = pres.p
    rels = []
    for r in pres.relators:
        for s in range(1, p + 1):
            vec, end = pres.lift(r, s)
            assert end == s, "coloring does not define a representation"
            rels.append(vec)
    for i in range(pres.m):
        seen = set()
        for s in range(1, p + 1):
            if s in seen:
                continue
            orbit = [s]
            while pres.act(i, orbit[-1]) != s:
                orbit.append(pres.act(i, orbit[-1]))
            seen.update(orbit)
            vec, _ = pres.lift([(i, 1)] * len(orbit), s)
            rels.append(vec)
    return linalg.RowSpace(rels)


class _LinkingSolver:
    """H_1 of the cover minus one lift of g, for each lift index j."""

    def __init__(self, code, p):
        self.code = code
        self.pres = _Presentation(code, p)
        self.base = _base_relations(self.pres)
        self._spaces = {}

    def _space(self, j):
        if j not in self._spaces:
            pres = self.pres
            space = self.base.copy()
            for s in range(1, pres.p + 1):
                if s != j:
                    space.add({pres.edge(pres.m, s): 1})
            meridian = space.reduce({pres.edge(pres.m, j): 1})
            if not meridian:
                raise CoverError("meridian of the lift is null-homologous: "
                                 "cover is not a rational homology sphere")
            self._spaces[j] = (space, meridian)
        return self._spaces[j]

    def linking_number(self, h_name, j, k):
        if h_name not in self.code.curves:
            raise CoverError(f"unknown curve {h_name!r}")
        space, meridian = self._space(j)
        h_vec, end = self.pres.lift(curve_word(self.code, self.code.curves[h_name]), k)
        if end != k:
            raise CoverError(f"lift {k} of curve {h_name!r} does not close up")
        h = space.reduce(h_vec)
        c = next(iter(meridian))
        lam = h.get(c, Fraction(0)) / meridian[c]
        if any(h.get(i, 0) != lam * x for i, x in meridian.items()) or set(h) - set(meridian):
            raise CoverError("lift is not homologous to a multiple of the meridian")
        return lam


def linking_number(code, h_name, j, k, p=3):
    """lk(g^j, h^k) in the dihedral branched cover, as an exact Fraction."""
    return _LinkingSolver(code, p).linking_number(h_name, j, k)


def linking_block(code, g_name=None, h_name=None, p=3, resolution="left"):
    """3x3 (p x p) matrix B[j][k] = lk(g^j, h^k) for the curves of ``code``.

    ``g_name`` must be the first auxiliary curve of the code (the one the
    knot arcs are cut by); ``h_name`` is any curve of the code.
    """
    if g_name is None:
        g_name = code.g_name
    if g_name not in code.curves:
        raise CoverError(f"unknown curve {g_name!r}")
    if g_name != code.g_name:
        raise CoverError(f"{g_name!r} is not the first auxiliary curve of this code")
    if h_name is None:
        h_name = next((n for n in code.curves if n != g_name), g_name)
    build_cover(code, p)
    solver = _LinkingSolver(code, p)
    rows = []
    for j in range(1, p + 1):
        row = []
        for k in range(1, p + 1):
            lk = solver.linking_number(h_name, j, k)
            row.append(int(lk) if lk.denominator == 1 else lk)
        rows.append(tuple(row))
    return LinkingBlock(tuple(rows), g_name, h_name, resolution)
