"""
Trisection arithmetic for irregular dihedral covers of S^4 and checks of
(singular) tri-plane diagrams.

A tangle is stored as caps on the pairs (1,2), (3,4), ... followed by a
braid word on 2b strands read downwards to the endpoints.  Its mirror
image across the endpoint line is the inverse word, so the closure of
tangles X and Y is the plat closure of ``word(X) + inverse(word(Y))``.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import io, links
from .diagram import DiagramError


class TrisectionError(ValueError):
    pass


@dataclass(frozen=True)
class TrisectionParams:
    g: int
    k: tuple

    def __post_init__(self):
        if self.g < 0:
            raise TrisectionError(f"negative genus {self.g}")
        for x in self.k:
            if x < 0 or x > self.g:
                raise TrisectionError(f"handlebody parameter {x} outside 0..{self.g}")

    def __str__(self):
        return f"({self.g};{','.join(map(str, self.k))})"


@dataclass(frozen=True)
class EulerData:
    p: int
    chi_B: int
    m: int
    euler_number: int = 0

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0:
            raise TrisectionError("p must be odd and at least 3")
        if self.m < 0:
            raise TrisectionError("the number of singular points is nonnegative")


def euler_char_cover(data):
    """chi(Y) = 2p - (p-1)/2 chi(B) - (p-1)/2 m."""
    h = (data.p - 1) // 2
    return 2 * data.p - h * data.chi_B - h * data.m


def homotopy_cp2_constraint(p, g_surface, m):
    """Whether a p-fold cover branched over a genus g surface with m cone points can have chi = 3."""
    return (p - 1) // 2 * (2 + 2 * g_surface - m) == 1


def _check_p(p):
    if p < 3 or p % 2 == 0:
        raise TrisectionError("p must be odd and at least 3")


def central_genus(p, b):
    return 1 - p * (1 - b) - b * (1 + (p - 1) // 2)


def sector_parameter(p, c):
    return 1 - p * (1 - c) - c - c * (p - 1) // 2


def lift_trisection_params(p, b, c, singular_first=True):
    """Trisection parameters of the cover from bridge number b and patch counts c."""
    _check_p(p)
    c = tuple(c)
    if len(c) != 3:
        raise TrisectionError("need three patch counts")
    g = central_genus(p, b)
    ks = [0 if singular_first else sector_parameter(p, c[0])]
    ks += [sector_parameter(p, ci) for ci in c[1:]]
    if g < 0 or any(k < 0 for k in ks):
        raise TrisectionError(
            "representation not surjective / invalid bridge data: "
            f"g = {g}, k = {tuple(ks)}")
    return TrisectionParams(g, tuple(ks))


def central_surface_euler(p, b):
    """chi of the central surface: p copies of S^2 minus 2b points glued along the branch points."""
    return p * (2 - 2 * b) + 2 * b * (1 + (p - 1) // 2)


# ------------------------------------------------------------- tri-planes

@dataclass(frozen=True)
class Tangle:
    word: tuple
    colors: tuple


@dataclass(frozen=True)
class TriPlaneDiagram:
    b: int
    tangles: dict              # "A", "B", "C" -> Tangle
    p: int = 3
    cone: str = None           # name of the closure that is coned off, e.g. "L1"

    @property
    def strands(self):
        return 2 * self.b


@dataclass
class ClosureReport:
    name: str
    tangles: str
    word: tuple
    components: int
    coloring_valid: bool
    nontrivial: bool
    determinant: int
    status: str
    knot: str = None
    alexander: tuple = None


@dataclass
class TriPlaneReport:
    closures: list
    chi_B: int
    surface: str
    m: int
    params: TrisectionParams = None
    notes: list = field(default_factory=list)


CLOSURES = (("L1", "A", "B"), ("L2", "B", "C"), ("L3", "C", "A"))


def _inverse(word):
    return tuple(-x for x in reversed(word))


def identify_knot(word, n):
    """Name a knotted closure when it reduces to a 4-plat (two-bridge)."""
    w, m, split = links.reduce_plat(word, n, budget=3000)
    if split == 0 and m == 4:
        return links.name_two_bridge(links.four_plat_fraction(w))
    if split == 0 and m == 2:
        return "unknot"
    return None


def validate_triplane(d):
    n = d.strands
    names = ("A", "B", "C")
    for x in names:
        if x not in d.tangles:
            raise TrisectionError(f"missing tangle {x}")
        t = d.tangles[x]
        if len(t.colors) != n:
            raise TrisectionError(f"tangle {x} needs {n} endpoint colors")
        if any(abs(g) < 1 or abs(g) >= n for g in t.word):
            raise TrisectionError(f"tangle {x} has a generator out of range")
    ref = d.tangles["A"].colors
    for x in names[1:]:
        if tuple(c % d.p for c in d.tangles[x].colors) != tuple(c % d.p for c in ref):
            raise TrisectionError(f"endpoint color mismatch between tangles A and {x}")
    caps_ok = {}
    for x in names:
        _, ok = links.tangle_cap_colors(d.tangles[x].word, n, d.tangles[x].colors, d.p)
        caps_ok[x] = ok
    nontrivial = len({c % d.p for c in ref}) > 1
    reports = []
    for name, x, y in CLOSURES:
        word = tuple(d.tangles[x].word) + _inverse(d.tangles[y].word)
        link = links.plat_link(word, n)
        comps = link.n_components
        det = link.determinant()
        rep = ClosureReport(name, f"{x} u {y}-bar", word, comps, caps_ok[x] and caps_ok[y],
                            nontrivial, det, "")
        if name == d.cone:
            rep.status = "coned"
            if comps == 1:
                rep.alexander = link.alexander_polynomial()
                rep.knot = identify_knot(word, n) or "unidentified"
        else:
            rep.status = links.certify_unlink(word, n, comps)
        reports.append(rep)
    chi = sum(r.components for r in reports) - d.b
    m = 1 if d.cone else 0
    notes = []
    if chi > 2:
        surface = "impossible"
        notes.append(f"chi(B) = {chi} > 2: no connected surface, in particular not a sphere")
    elif chi == 2:
        surface = "sphere"
    else:
        surface = f"chi = {chi}"
    if not nontrivial:
        notes.append("coloring trivial")
    for r in reports:
        if not r.coloring_valid:
            notes.append(f"{r.name}: endpoint colors do not extend over the caps")
    params = None
    if nontrivial and surface != "impossible":
        c = tuple(r.components for r in reports)
        try:
            params = lift_trisection_params(d.p, d.b, c, singular_first=d.cone == "L1")
        except TrisectionError as e:
            notes.append(str(e))
    return TriPlaneReport(reports, chi, surface, m, params, notes)


def triplane_from_sections(sections):
    head = sections.get(("triplane",))
    if head is None:
        raise DiagramError("missing [triplane] section")
    try:
        (b,) = (int(x) for x in io.require(head, "b", "triplane"))
        p = int(head.get("p", ["3"])[0])
    except ValueError:
        raise DiagramError("b and p must be integers") from None
    cone = head.get("cone", [None])[0]
    tangles = {}
    for x in ("A", "B", "C"):
        sec = sections.get(("tangle", x))
        if sec is None:
            raise DiagramError(f"missing [tangle {x}]")
        try:
            word = tuple(int(v) for v in sec.get("word", []))
            colors = tuple(int(v) for v in io.require(sec, "colors", f"tangle {x}"))
        except ValueError:
            raise DiagramError(f"[tangle {x}]: invalid integer") from None
        tangles[x] = Tangle(word, colors)
    return TriPlaneDiagram(b, tangles, p, cone)


def load_triplane(path):
    return triplane_from_sections(io.read_sections(path))
