"""
Labeled diagram codes for a knot together with auxiliary curves, and
Fox p-colorings of the knot.

A code lists, for every arc of a component, the over-arc met at the head
of that arc (``f``), the local writhe there (``eps``) and whether that
over-arc belongs to the knot (``K``) or to the first auxiliary curve
(``P``).  Arcs are numbered from 0 in the direction of the orientation,
so the head of arc ``i`` leads into arc ``i + 1`` (cyclically).

The first auxiliary curve plays the role of ``g``: knot arcs are cut
where they pass under it.  Any further curve is an ``h``-type curve
which is added afterwards without renumbering; only its own
under-crossings are recorded.
"""

import itertools
from dataclasses import dataclass, field

from . import linalg

KNOT, CURVE = "K", "P"


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class CurveCode:
    f: tuple
    eps: tuple
    t: tuple

    def __len__(self):
        return len(self.f)


@dataclass(frozen=True)
class DiagramCode:
    alpha_f: tuple
    alpha_eps: tuple
    alpha_t: tuple
    alpha_c: tuple
    curves: dict = field(default_factory=dict)

    def __post_init__(self):
        m = len(self.alpha_f)
        if m == 0:
            raise DiagramError("empty diagram")
        if not (len(self.alpha_eps) == len(self.alpha_t) == len(self.alpha_c) == m):
            raise DiagramError("length mismatch in alpha lists")
        n_g = len(self.g) if self.curves else 0
        _check_lists("alpha", self.alpha_f, self.alpha_eps, self.alpha_t, m, n_g)
        for c in self.alpha_c:
            if not isinstance(c, int) or c < 1:
                raise DiagramError(f"invalid color {c!r}")
        for name, cc in self.curves.items():
            if len(cc) == 0:
                raise DiagramError(f"empty curve {name!r}")
            if not (len(cc.eps) == len(cc.t) == len(cc.f)):
                raise DiagramError(f"length mismatch in curve {name!r}")
            _check_lists(name, cc.f, cc.eps, cc.t, m, n_g)

    @property
    def m(self):
        return len(self.alpha_f)

    @property
    def g_name(self):
        return next(iter(self.curves))

    @property
    def g(self):
        return self.curves[self.g_name]

    def with_colors(self, colors):
        return DiagramCode(self.alpha_f, self.alpha_eps, self.alpha_t, tuple(colors), self.curves)

    def mirror(self):
        """Mirror image: every crossing sign flips, colors are unchanged."""
        curves = {k: CurveCode(v.f, tuple(-e for e in v.eps), v.t) for k, v in self.curves.items()}
        return DiagramCode(self.alpha_f, tuple(-e for e in self.alpha_eps), self.alpha_t,
                           self.alpha_c, curves)


def _check_lists(name, f, eps, t, m, n_g):
    for i, (fi, ei, ti) in enumerate(zip(f, eps, t)):
        if ei not in (1, -1):
            raise DiagramError(f"{name}: sign at arc {i} must be +1 or -1")
        if ti == KNOT:
            bound = m
        elif ti == CURVE:
            if n_g == 0:
                raise DiagramError(f"{name}: tag P at arc {i} but no auxiliary curve")
            bound = n_g
        else:
            raise DiagramError(f"{name}: unknown tag {ti!r} at arc {i}")
        if not (isinstance(fi, int) and 0 <= fi < bound):
            raise DiagramError(f"{name}: out-of-range index {fi!r} at arc {i}")


# ---------------------------------------------------------------- parsing

_SIGNS = {"+": 1, "-": -1, "+1": 1, "-1": -1, "1": 1}
_TAGS = {"k": KNOT, "p": CURVE, "K": KNOT, "P": CURVE}


def _signs(tokens):
    try:
        return tuple(_SIGNS[tok] if isinstance(tok, str) else int(tok) for tok in tokens)
    except KeyError as e:
        raise DiagramError(f"invalid sign token {e.args[0]!r}") from None


def _tags(tokens):
    try:
        return tuple(_TAGS[tok] for tok in tokens)
    except KeyError as e:
        raise DiagramError(f"unknown tag {e.args[0]!r}") from None


def _ints(tokens, what):
    try:
        return tuple(int(tok) for tok in tokens)
    except (TypeError, ValueError):
        raise DiagramError(f"invalid integer in {what}") from None


def code_from_sections(sections):
    """Build a DiagramCode from the parsed ``[alpha]`` and ``[curve ...]`` sections."""
    from .io import require

    alpha = sections.get(("alpha",))
    if alpha is None:
        raise DiagramError("missing [alpha] section")
    f = _ints(require(alpha, "f", "alpha"), "alpha f")
    eps = _signs(require(alpha, "eps", "alpha"))
    t = _tags(require(alpha, "t", "alpha"))
    c = _ints(require(alpha, "c", "alpha"), "alpha c")
    if not (len(f) == len(eps) == len(t) == len(c)):
        if len(f) == 0:
            raise DiagramError("empty diagram")
        raise DiagramError("length mismatch in alpha lists")
    curves = {}
    for key, sec in sections.items():
        if key[0] == "curve":
            if len(key) != 2:
                raise DiagramError("curve sections need exactly one name")
            name = key[1]
            curves[name] = CurveCode(_ints(require(sec, "f", name), name + " f"),
                                     _signs(require(sec, "eps", name)),
                                     _tags(require(sec, "t", name)))
    return DiagramCode(f, eps, t, c, curves)


def parse_diagram_code(text, fmt="text"):
    """Parse the sectioned text format (or its JSON mirror) into a DiagramCode."""
    from .io import parse_sections

    return code_from_sections(parse_sections(text, fmt))


# --------------------------------------------------------------- colorings

def reflect(c, s, p):
    """Action of the reflection attached to color c on the point s (both in 1..p)."""
    r = (2 * c - s) % p
    return r if r else p


def _to_color(x, p):
    x %= p
    return x if x else p


@dataclass(frozen=True)
class FoxColoring:
    colors: tuple
    p: int

    @property
    def nontrivial(self):
        return len(set(self.colors)) > 1


@dataclass
class ColoringReport:
    valid: bool
    nontrivial: bool
    violations: list

    def __bool__(self):
        return self.valid


def crossing_equations(code, p):
    """Rows of the mod-p linear system whose solutions are the colorings of the knot."""
    m = code.m
    rows = []
    for i in range(m):
        row = [0] * m
        j = (i + 1) % m
        if code.alpha_t[i] == KNOT:
            row[i] += 1
            row[j] += 1
            row[code.alpha_f[i]] -= 2
        else:
            row[i] += 1
            row[j] -= 1
        rows.append([x % p for x in row])
    return rows


def validate_coloring(code, p=3):
    """Check the Fox relation at every crossing at the head of a knot arc."""
    c = code.alpha_c
    m = code.m
    violations = []
    for i in range(m):
        j = (i + 1) % m
        if any(not 1 <= x <= p for x in (c[i], c[j])):
            violations.append((i, "color out of range"))
        elif code.alpha_t[i] == KNOT:
            a = c[code.alpha_f[i]]
            if (c[i] + c[j] - 2 * a) % p:
                violations.append((i, f"{c[i]} + {c[j]} != 2*{a} mod {p}"))
        elif c[i] != c[j]:
            violations.append((i, f"color changes under auxiliary curve ({c[i]} -> {c[j]})"))
    return ColoringReport(not violations, len(set(c)) > 1, violations)


def enumerate_colorings(code, p):
    """All Fox p-colorings of the knot in ``code``, trivial ones included."""
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd integer >= 3")
    basis = linalg.nullspace_mod_p(crossing_equations(code, p), p)
    out = []
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        v = [0] * code.m
        for a, b in zip(coeffs, basis):
            if a:
                v = [x + a * y for x, y in zip(v, b)]
        out.append(FoxColoring(tuple(_to_color(x, p) for x in v), p))
    return sorted(out, key=lambda col: col.colors)


def affine_orbit_key(coloring):
    """Canonical representative of a coloring under c -> a*c + b, a a unit mod p."""
    p = coloring.p
    images = []
    for a in range(1, p):
        if a % p and _gcd(a, p) == 1:
            for b in range(p):
                images.append(tuple(_to_color(a * x + b, p) for x in coloring.colors))
    return min(images)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def equivalence_classes(colorings):
    classes = {}
    for col in colorings:
        classes.setdefault(affine_orbit_key(col), []).append(col)
    return list(classes.values())


def determinant_from_form(Q):
    """Absolute value of the determinant of a square integer matrix."""
    if not linalg.is_square(Q):
        raise ValueError("matrix must be square")
    return abs(linalg.determinant(Q))


# ------------------------------------------------- codes from crossing data

def braid_crossings(word, n):
    """
    Crossing data of a closed braid.

    ``word`` holds nonzero ints: ``i`` puts the strand at position i-1
    over the one at position i, ``-i`` puts it under; strands run downward.
    Returns (components, signs) in the format of :func:`code_from_crossings`.
    """
    events = {s: [] for s in range(n)}   # strand-at-top -> events along the pass
    pos = list(range(n))                 # pos[k] = top strand currently at position k
    signs = {}
    for cid, gen in enumerate(word):
        i = abs(gen) - 1
        if not 0 <= i < n - 1:
            raise DiagramError(f"braid generator {gen} out of range")
        left, right = pos[i], pos[i + 1]
        left_over = gen > 0
        events[left].append((cid, "over" if left_over else "under"))
        events[right].append((cid, "under" if left_over else "over"))
        # left strand moves down-right (1, -1), right strand down-left (-1, -1)
        over, under = ((1, -1), (-1, -1)) if left_over else ((-1, -1), (1, -1))
        signs[cid] = 1 if over[0] * under[1] - over[1] * under[0] > 0 else -1
        pos[i], pos[i + 1] = right, left
    bottom = {pos[k]: k for k in range(n)}   # top strand -> bottom position
    components, seen = [], set()
    for s in range(n):
        if s in seen:
            continue
        comp, t = [], s
        while t not in seen:
            seen.add(t)
            comp.extend(events[t])
            t = bottom[t]
        components.append(comp)
    return components, signs


def code_from_crossings(components, signs, alpha=0, curves=(1,), colors=None):
    """
    Build a DiagramCode from full crossing data.

    ``components[i]`` lists (crossing id, "over"/"under") along component i
    in the direction of its orientation; ``signs`` maps crossing ids to
    writhe signs.  ``alpha`` is the knot component and ``curves`` the
    auxiliary components, the first of which plays the role of g.
    Self-crossings of later curves are ignored.
    """
    g = curves[0]
    breakers = {alpha: {alpha, g}, g: {alpha, g}}
    for h in curves[1:]:
        breakers[h] = {alpha, g}
    where = {}
    for ci, comp in enumerate(components):
        for pos, (cid, role) in enumerate(comp):
            where.setdefault(cid, {})[role] = (ci, pos)
    for cid, roles in where.items():
        if set(roles) != {"over", "under"}:
            raise DiagramError(f"crossing {cid} needs one over and one under strand")

    def heads(ci):
        """Positions of arc heads along component ci (where it passes under a breaker)."""
        comp = components[ci]
        return [pos for pos, (cid, role) in enumerate(comp)
                if role == "under" and where[cid]["over"][0] in breakers[ci]]

    def arc_index(ci, pos):
        """Arc of component ci containing the over-pass at position pos."""
        hs = heads(ci)
        if not hs:
            return 0
        k = sum(1 for h in hs if h < pos)
        return k % len(hs)

    def lists(ci):
        f, eps, t = [], [], []
        for pos in heads(ci):
            cid = components[ci][pos][0]
            oc, opos = where[cid]["over"]
            f.append(arc_index(oc, opos))
            eps.append(signs[cid])
            t.append(KNOT if oc == alpha else CURVE)
        return f, eps, t

    af, ae, at = lists(alpha)
    if colors is None:
        colors = [1] * len(af)
    elif isinstance(colors, dict):
        # colors given per position along the knot component
        colors = [colors[h] for h in heads(alpha)]
    named = {}
    for ci in curves:
        f, eps, t = lists(ci)
        if not f:
            raise DiagramError(f"component {ci} never passes under the knot or g")
        named[f"c{ci}"] = CurveCode(tuple(f), tuple(eps), tuple(t))
    return DiagramCode(tuple(af), tuple(ae), tuple(at), tuple(colors), named)


def knot_positions_colors(code, components, alpha=0, curves=(1,)):
    """Color of every position along the knot component, read from ``code``.

    ``code`` must have been built by :func:`code_from_crossings` from the same
    data; the result can be passed as ``colors`` when rebuilding the code with
    a different first curve.
    """
    comp = components[alpha]
    where = {}
    for ci, cm in enumerate(components):
        for pos, (cid, role) in enumerate(cm):
            where.setdefault(cid, {})[role] = ci
    breakers = {alpha, curves[0]}
    heads = [pos for pos, (cid, role) in enumerate(comp)
             if role == "under" and where[cid]["over"] in breakers]
    out = {}
    for pos in range(len(comp)):
        k = sum(1 for h in heads if h < pos) % len(heads)
        out[pos] = code.alpha_c[k]
    return out
