"""
Shadow words on the six-point sphere, their lifts to the 3-fold branched
cover (a torus) and identification of genus-one trisection diagrams.

The sphere carries the cell structure whose equator runs through the six
branch points

    a --y1-- b --x1-- c --y2-- d --x2-- e --y3-- f --x3-- a

with the two hemispheres D and E.  The y-edges join branch points of equal
color and are the cuts of the cover: crossing y_i from D on sheet j lands
on sheet sigma_i(j) in E, where sigma_i is the transposition fixing the
color of its endpoints.  Crossing an x-edge keeps the sheet.

A shadow word lists the edges a path crosses, starting in D, so the sides
alternate D, E, D, ...  A lifted letter carries the D-side sheet of the
edge it crosses, which is the sheet the path occupies when it meets a
y-edge from D (and the sheet it lands on when it meets one from E).
"""

import re
from dataclasses import dataclass
from math import gcd

from . import linalg
from .diagram import DiagramError

LETTERS = ("x1", "x2", "x3", "y1", "y2", "y3")

# y_i -> images of sheets (1, 2, 3)
DEFAULT_IDENTIFICATIONS = {
    "y1": (3, 2, 1),
    "y2": (2, 1, 3),
    "y3": (1, 3, 2),
}

# vertex, branch color, edge to the next vertex
EQUATOR = (
    ("a", 2, "y1"),
    ("b", 2, "x1"),
    ("c", 3, "y2"),
    ("d", 3, "x2"),
    ("e", 1, "y3"),
    ("f", 1, "x3"),
)


class ShadowError(ValueError):
    pass


@dataclass(frozen=True)
class ShadowWord:
    letters: tuple                 # letter names from LETTERS
    sheets: tuple = None           # one sheet per letter once lifted

    def __post_init__(self):
        bad = [x for x in self.letters if x not in LETTERS]
        if bad:
            raise ShadowError(f"unknown letter {bad[0]!r}")
        if self.sheets is not None and len(self.sheets) != len(self.letters):
            raise ShadowError("one sheet per letter is required")

    def __len__(self):
        return len(self.letters)

    @property
    def lifted(self):
        return self.sheets is not None

    def projection(self):
        return ShadowWord(self.letters)

    def __str__(self):
        if self.sheets is None:
            return " ".join(self.letters)
        return " ".join(f"{x}^{s}" for x, s in zip(self.letters, self.sheets))

    def latex(self):
        """Compact form in the subscript/superscript notation, e.g. ``y_2^2x_1^1``."""
        if self.sheets is None:
            return "".join(f"{x[0]}_{x[1]}" for x in self.letters)
        return "".join(f"{x[0]}_{x[1]}^{s}" for x, s in zip(self.letters, self.sheets))


# ------------------------------------------------------------------ parsing

_TOKEN = re.compile(r"\s*(?:(?P<letter>[xyz])(?P<index>\d)(?:\^(?P<sheet>\d))?"
                    r"|(?P<open>\()|(?P<close>\))(?:\^(?P<exp>\d*[a-z]?|\{\d*[a-z]?\}))?)")


def _clean(text):
    text = text.replace("\\left", "").replace("\\right", "").replace("$", "")
    text = re.sub(r"([xyz])_\{?(\d)\}?", r"\1\2", text)
    return re.sub(r"\^\{(\d)\}", r"^\1", text).strip().rstrip(".")


def _exponent(raw, values):
    raw = raw.strip("{}")
    if not raw:
        raise ShadowError("empty exponent")
    m = re.fullmatch(r"(\d*)([a-z]?)", raw)
    coef = int(m.group(1)) if m.group(1) else 1
    var = m.group(2)
    if not var:
        return coef
    if var not in values:
        raise ShadowError(f"no value given for exponent variable {var!r}")
    return coef * values[var]


def parse_shadow_word(text, **values):
    """
    Parse ``y2 (x1 y1 y2 x2 y1 y2)^3i`` and friends.

    A superscript directly after a letter is a sheet label; an exponent
    after a closing parenthesis repeats the group.  Exponents may be an
    integer or ``<n><var>`` with ``var`` supplied as a keyword argument.
    LaTeX spellings such as ``y_2^2\\left(...\\right)^i`` are accepted.
    """
    s = _clean(text)
    pos = 0
    stack = [[]]
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ShadowError(f"cannot parse shadow word at {s[pos:pos + 12]!r}")
        pos = m.end()
        if m.group("letter"):
            if m.group("letter") == "z":
                raise ShadowError("z-edges are glued to y-edges; write y instead")
            name = m.group("letter") + m.group("index")
            if name not in LETTERS:
                raise ShadowError(f"unknown letter {name!r}")
            sheet = int(m.group("sheet")) if m.group("sheet") else None
            stack[-1].append((name, sheet))
        elif m.group("open"):
            stack.append([])
        else:
            if len(stack) == 1:
                raise ShadowError("unbalanced ')'")
            group = stack.pop()
            n = _exponent(m.group("exp"), values) if m.group("exp") is not None else 1
            stack[-1].extend(group * n)
        while pos < len(s) and s[pos].isspace():
            pos += 1
    if len(stack) != 1:
        raise ShadowError("unbalanced '('")
    items = stack[0]
    names = tuple(x for x, _ in items)
    sheets = [y for _, y in items]
    if all(y is None for y in sheets):
        return ShadowWord(names)
    if any(y is None for y in sheets):
        raise ShadowError("either every letter or no letter carries a sheet")
    return ShadowWord(names, tuple(sheets))


def read_word_file(path):
    """``word = ...`` plus optional integer keys for exponent variables, one per line."""
    entries = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line or line.startswith("["):
                continue
            if "=" not in line:
                raise DiagramError(f"{path}:{lineno}: expected 'key = value'")
            k, v = line.split("=", 1)
            entries[k.strip()] = v.strip()
    if "word" not in entries:
        raise DiagramError(f"{path}: missing 'word ='")
    values = {}
    for k, v in entries.items():
        if k != "word":
            try:
                values[k] = int(v)
            except ValueError:
                raise DiagramError(f"{path}: {k} must be an integer") from None
    try:
        return parse_shadow_word(entries["word"], **values)
    except ShadowError as e:
        raise DiagramError(str(e)) from None


# ------------------------------------------------------------------ lifting

def _check_identifications(ids):
    for name in ("y1", "y2", "y3"):
        perm = ids.get(name)
        if perm is None or sorted(perm) != [1, 2, 3]:
            raise ShadowError(f"identification for {name} must permute 1, 2, 3")


@dataclass(frozen=True)
class LiftedPath:
    word: ShadowWord
    faces: tuple        # (side, sheet) before the first and after each letter

    @property
    def start(self):
        return self.faces[0]

    @property
    def end(self):
        return self.faces[-1]


def lift_path(word, start_sheet, identifications=None):
    ids = identifications or DEFAULT_IDENTIFICATIONS
    _check_identifications(ids)
    if start_sheet not in (1, 2, 3):
        raise ShadowError("start sheet must be 1, 2 or 3")
    side, sheet = "D", start_sheet
    faces = [(side, sheet)]
    labels = []
    for x in word.letters:
        if x[0] == "x":
            labels.append(sheet)
        elif side == "D":
            labels.append(sheet)
            sheet = ids[x][sheet - 1]
        else:
            sheet = ids[x][sheet - 1]
            labels.append(sheet)
        side = "E" if side == "D" else "D"
        faces.append((side, sheet))
    return LiftedPath(ShadowWord(word.letters, tuple(labels)), tuple(faces))


def lift_shadow_word(word, start_sheet, identifications=None):
    """Lift of ``word`` beginning on ``start_sheet``; letters get sheet superscripts."""
    if word.lifted:
        word = word.projection()
    return lift_path(word, start_sheet, identifications).word


def conjugate_identifications(ids, tau):
    """Identification table after renaming sheet s to tau[s - 1]."""
    inv = [0] * 3
    for i, t in enumerate(tau):
        inv[t - 1] = i + 1
    return {k: tuple(tau[v[inv[s] - 1] - 1] for s in range(3)) for k, v in ids.items()}


# ------------------------------------------------------- solid torus check

@dataclass(frozen=True)
class BranchColoring:
    rho: tuple

    def __post_init__(self):
        if any(r not in (1, 2, 3) for r in self.rho):
            raise ShadowError("colors must be 1, 2 or 3")
        if len(set(self.rho)) < 2:
            raise ShadowError("coloring is not surjective onto the dihedral group")


def meridian_status(coloring):
    """
    For a 3-strand trivial tangle: each closed shadow is a meridian of the
    covering solid torus, or bounds a disk on its boundary.  A strand whose
    color appears once while the other two agree gives the null curve.
    """
    if not isinstance(coloring, BranchColoring):
        coloring = BranchColoring(tuple(coloring))
    rho = coloring.rho
    if len(rho) != 3:
        raise ShadowError("expected three strands")
    out = []
    for i, r in enumerate(rho):
        others = [x for j, x in enumerate(rho) if j != i]
        out.append("nullhomotopic" if others[0] == others[1] != r else "meridian")
    return tuple(out)


# ---------------------------------------------------------- torus homology

class TorusComplex:
    """
    The dual cell complex of the lifted structure: one vertex per lifted
    face (side, sheet), one edge per lifted edge (oriented D to E), one
    2-cell per lifted branch point.
    """

    def __init__(self, identifications=None):
        self.ids = identifications or DEFAULT_IDENTIFICATIONS
        _check_identifications(self.ids)
        self.faces = [(s, j) for s in "DE" for j in (1, 2, 3)]
        self.edges = [(e, j) for e in LETTERS for j in (1, 2, 3)]
        self._edge_index = {e: i for i, e in enumerate(self.edges)}
        self.loops = self._vertex_loops()
        self._build()

    def _perm(self, edge):
        return self.ids[edge] if edge[0] == "y" else (1, 2, 3)

    def step(self, face, edge):
        """Cross ``edge`` from ``face``: (dual edge, sign, new face)."""
        side, j = face
        perm = self._perm(edge)
        if side == "D":
            return (edge, j), 1, ("E", perm[j - 1])
        back = perm.index(j) + 1
        return (edge, back), -1, ("D", back)

    def _vertex_loops(self):
        loops = {}
        n = len(EQUATOR)
        for i, (v, color, e_next) in enumerate(EQUATOR):
            e_prev = EQUATOR[i - 1][2]
            seen = set()
            for j in (1, 2, 3):
                if j in seen:
                    continue
                steps, face = [], ("D", j)
                while True:
                    seen.add(face[1])
                    for e in (e_prev, e_next):
                        d, s, nxt = self.step(face, e)
                        steps.append((face, d, s))
                        face = nxt
                    if face == ("D", j):
                        break
                sheets = tuple(sorted({f[1] for f, _, _ in steps}))
                loops[(v, sheets)] = steps
        return loops

    def _build(self):
        n = len(self.edges)
        d1 = [[0] * n for _ in self.faces]
        fidx = {f: i for i, f in enumerate(self.faces)}
        for k, (e, j) in enumerate(self.edges):
            _, _, tail = self.step(("D", j), e)
            d1[fidx[("D", j)]][k] -= 1
            d1[fidx[tail]][k] += 1
        D, U, V = linalg.smith_normal_form(d1)
        r = sum(1 for i in range(min(len(D), n)) if D[i][i])
        self._Vinv = linalg.inverse_unimodular(V)
        self._r1 = r
        rel = [self.chain(steps) for steps in self.loops.values()]
        coords = [self._kernel_coords(c) for c in rel]
        R = linalg.transpose(coords)           # kernel rank x loops
        D2, U2, _ = linalg.smith_normal_form(R)
        r2 = sum(1 for i in range(min(len(D2), len(D2[0]))) if D2[i][i])
        if any(abs(D2[i][i]) != 1 for i in range(r2)):
            raise ShadowError("lifted cell structure has torsion in H_1")
        self._U2 = U2
        self._r2 = r2
        self.rank = len(R) - r2

    def chain(self, steps):
        c = [0] * len(self.edges)
        for _, d, s in steps:
            c[self._edge_index[d]] += s
        return c

    def _kernel_coords(self, chain):
        y = linalg.mat_vec(self._Vinv, chain)
        if any(y[:self._r1]):
            raise ShadowError("chain is not a cycle")
        return y[self._r1:]

    def homology_class(self, chain):
        k = self._kernel_coords(chain)
        return tuple(linalg.mat_vec(self._U2, k)[self._r2:])

    def walk(self, start, letters):
        """Steps of the dual path crossing ``letters`` from face ``start``."""
        steps, face = [], start
        for e in letters:
            d, s, nxt = self.step(face, e)
            steps.append((face, d, s))
            face = nxt
        return steps, face

    def around(self, vertex, f, g):
        """Steps going round a lifted branch point over ``vertex`` from face f to face g."""
        for (v, _), loop in self.loops.items():
            if v != vertex:
                continue
            faces = [st[0] for st in loop]
            if f in faces and g in faces:
                i = faces.index(f)
                out = []
                while loop[i][0] != g:
                    out.append(loop[i])
                    i = (i + 1) % len(loop)
                return out
        raise ShadowError(f"faces {f} and {g} do not meet at a lift of {vertex}")


def _reverse(steps):
    return [(None, d, -s) for _, d, s in reversed(steps)]


def _vertex_color(v):
    for name, color, _ in EQUATOR:
        if name == v:
            return color
    raise ShadowError(f"unknown vertex {v!r}")


@dataclass(frozen=True)
class TorusCurveClass:
    a: int
    b: int

    def __post_init__(self):
        if (self.a, self.b) != (0, 0) and gcd(self.a, self.b) != 1:
            raise ShadowError(f"class ({self.a}, {self.b}) is not primitive")

    @property
    def null(self):
        return self.a == 0 == self.b

    def det(self, other):
        return self.a * other.b - self.b * other.a

    def __add__(self, other):
        return TorusCurveClass(self.a + other.a, self.b + other.b)

    def __neg__(self):
        return TorusCurveClass(-self.a, -self.b)

    def same_curve(self, other):
        """Equal up to orientation."""
        return (self.a, self.b) in ((other.a, other.b), (-other.a, -other.b))


def closed_shadow_class(word, start_vertex, end_vertex, identifications=None, complex_=None):
    """
    Homology class of the closed shadow: the two lifts leaving the ramified
    point over ``start_vertex``, joined at both ends around the branch points.
    """
    T = complex_ or TorusComplex(identifications)
    c = _vertex_color(start_vertex)
    s1, s2 = [s for s in (1, 2, 3) if s != c]
    if word.lifted:
        word = word.projection()
    p1, f1 = T.walk(("D", s1), word.letters)
    p2, f2 = T.walk(("D", s2), word.letters)
    steps = p1 + T.around(end_vertex, f1, f2) + _reverse(p2) + T.around(start_vertex, ("D", s2), ("D", s1))
    a, b = T.homology_class(T.chain(steps))
    return TorusCurveClass(a, b)


GENUS_ONE_TAGS = ("CP2", "CP2_BAR", "S4", "S1xS3", "other")


def identify_genus_one(alpha, beta, gamma):
    """
    Decision table for a genus-one trisection diagram (alpha, beta, gamma):

    - every pair meets once (|det| = 1): CP2 when det(a,b) det(b,c) det(c,a)
      is positive, CP2_BAR when negative
    - one pair is the same curve (det 0), the other two meet once: S4
    - all three curves coincide: S1xS3
    - anything else: other

    The sign of the triple product flips with the orientation of the torus.
    """
    curves = (alpha, beta, gamma)
    for c in curves:
        if not isinstance(c, TorusCurveClass):
            raise ShadowError("expected TorusCurveClass")
        if c.null:
            raise ShadowError("closed shadow is null-homologous, not a diagram curve")
    d = (alpha.det(beta), beta.det(gamma), gamma.det(alpha))
    mags = sorted(abs(x) for x in d)
    if mags == [1, 1, 1]:
        return "CP2" if d[0] * d[1] * d[2] > 0 else "CP2_BAR"
    if mags == [0, 1, 1]:
        return "S4"
    if mags == [0, 0, 0]:
        return "S1xS3"
    return "other"


# ----------------------------------------------------- the worked family

def b_family_word(n):
    """Shadow word of the tangle B_n for n divisible by 3."""
    if n < 0 or n % 3:
        raise ShadowError("B_n is 3-colorable only for n divisible by 3")
    period = "(x1 y1 y2 x2 y1 y2)"
    if n % 6 == 0:
        return parse_shadow_word(f"y2 {period}^{n // 2}")
    return parse_shadow_word(f"y2 {period}^{3 * (n // 6)} (x1 y1 y2 x2 y1 y2 x1 y1 y2)")
