"""
Planar link diagrams given by crossing data, and plat closures of braids.

A diagram is a list of components, each the ordered sequence of
``(crossing id, "over" | "under")`` events met along it, plus a writhe
sign per crossing.  Arcs run from one under-crossing to the next.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .diagram import DiagramError


@dataclass(frozen=True)
class Crossing:
    over: int      # arc index
    under_in: int
    under_out: int
    sign: int


class PlanarLink:
    def __init__(self, components, signs):
        self.components = [list(c) for c in components]
        self.signs = dict(signs)
        self._build()

    def _build(self):
        where = {}
        for ci, comp in enumerate(self.components):
            for pos, (cid, role) in enumerate(comp):
                if (cid, role) in where:
                    raise DiagramError(f"crossing {cid} has two {role} strands")
                where[(cid, role)] = (ci, pos)
        ids = {cid for cid, _ in where}
        for cid in ids:
            if (cid, "over") not in where or (cid, "under") not in where:
                raise DiagramError(f"crossing {cid} needs one over and one under strand")
        # arc labels: arc k of component ci starts after its k-th under event
        arc_of = {}         # (ci, pos) -> arc id for over events
        self.arc_component = []
        under_in, under_out = {}, {}
        for ci, comp in enumerate(self.components):
            unders = [pos for pos, (_, role) in enumerate(comp) if role == "under"]
            base = len(self.arc_component)
            if not unders:
                self.arc_component.append(ci)
                for pos in range(len(comp)):
                    arc_of[(ci, pos)] = base
                continue
            n = len(unders)
            self.arc_component.extend([ci] * n)
            for pos, (cid, role) in enumerate(comp):
                k = sum(1 for u in unders if u < pos) % n
                # arcs are numbered so arc k begins just after under event k-1
                arc_of[(ci, pos)] = base + k
                if role == "under":
                    idx = unders.index(pos)
                    under_in[cid] = base + idx
                    under_out[cid] = base + (idx + 1) % n
        self.crossings = {}
        for cid in sorted(ids):
            self.crossings[cid] = Crossing(arc_of[where[(cid, "over")]], under_in[cid],
                                           under_out[cid], self.signs[cid])

    @property
    def n_components(self):
        return len(self.components)

    @property
    def n_arcs(self):
        return len(self.arc_component)

    def coloring_matrix(self):
        rows = []
        for c in self.crossings.values():
            row = [0] * self.n_arcs
            row[c.under_in] += 1
            row[c.under_out] += 1
            row[c.over] -= 2
            rows.append(row)
        return rows

    def count_colorings(self, p):
        rows = self.coloring_matrix() or [[0] * self.n_arcs]
        return p ** len(linalg.nullspace_mod_p(rows, p))

    def colorings(self, p):
        rows = self.coloring_matrix() or [[0] * self.n_arcs]
        basis = linalg.nullspace_mod_p(rows, p)
        out = []
        for coeffs in itertools.product(range(p), repeat=len(basis)):
            v = [sum(a * b[i] for a, b in zip(coeffs, basis)) % p for i in range(self.n_arcs)]
            out.append(tuple(x if x else p for x in v))
        return sorted(out)

    def is_coloring(self, colors, p):
        return all((colors[c.under_in] + colors[c.under_out] - 2 * colors[c.over]) % p == 0
                   for c in self.crossings.values())

    def determinant(self):
        """|Delta(-1)| from a first minor of the coloring matrix (0 for split links)."""
        M = self.coloring_matrix()
        if len(M) != self.n_arcs:
            # some component never passes under: it lifts off the rest
            return 1 if self.n_components == 1 else 0
        minor = [row[1:] for row in M[1:]]
        if not minor:
            return 1
        return abs(linalg.determinant(minor))

    def alexander_polynomial(self):
        """
        Normalized Alexander polynomial of a knot, as integer coefficients
        from the constant term up; symmetric with positive leading term.
        """
        if self.n_components != 1:
            raise DiagramError("Alexander polynomial is only implemented for knots")
        n = self.n_arcs
        if not self.crossings:
            return (1,)

        def minor_at(t):
            rows = []
            for c in self.crossings.values():
                row = [Fraction(0)] * n
                row[c.over] += 1 - t
                a, b = (c.under_in, c.under_out) if c.sign > 0 else (c.under_out, c.under_in)
                row[a] += t
                row[b] -= 1
                rows.append(row)
            return linalg.determinant([r[1:] for r in rows[1:]])

        deg = n - 1
        pts = list(range(2, deg + 3))
        vals = [minor_at(Fraction(x)) for x in pts]
        coeffs = _interpolate(pts, vals)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
        if not coeffs:
            return (0,)
        if coeffs[-1] < 0:
            coeffs = [-x for x in coeffs]
        return tuple(int(x) for x in coeffs)


def _interpolate(xs, ys):
    """Exact coefficients (low to high) of the polynomial through the points."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] += ys[i] * basis[k] / denom
    return coeffs


def plat_crossings(word, n):
    """
    Crossing data of the plat closure of a braid on ``n`` strands (n even).

    Caps join positions (1,2), (3,4), ... above the braid and cups join
    the same pairs below.  Generators follow the closed-braid convention:
    ``i`` puts the strand at position i-1 over the one at position i.
    """
    if n % 2:
        raise DiagramError("plats need an even number of strands")
    events = {s: [] for s in range(n)}
    pos = list(range(n))
    geometry = {}
    for cid, gen in enumerate(word):
        i = abs(gen) - 1
        if not 0 <= i < n - 1:
            raise DiagramError(f"braid generator {gen} out of range")
        left, right = pos[i], pos[i + 1]
        left_over = gen > 0
        events[left].append((cid, "over" if left_over else "under"))
        events[right].append((cid, "under" if left_over else "over"))
        geometry[cid] = (left, right, left_over)
        pos[i], pos[i + 1] = right, left
    bottom = {pos[k]: k for k in range(n)}
    top_at = {k: s for s, k in bottom.items()}
    components, direction = [], {}
    seen = set()
    for start in range(n):
        if start in seen:
            continue
        comp = []
        s, down = start, True
        while True:
            seen.add(s)
            direction[s] = down
            comp.extend(events[s] if down else reversed(events[s]))
            if down:
                partner_bottom = bottom[s] ^ 1
                s = top_at[partner_bottom]
                down = False
            else:
                s = s ^ 1
                down = True
            if s == start and down:
                break
        components.append(comp)
    signs = {}
    for cid, (left, right, left_over) in geometry.items():
        vl = (1, -1) if direction[left] else (-1, 1)
        vr = (-1, -1) if direction[right] else (1, 1)
        over, under = (vl, vr) if left_over else (vr, vl)
        signs[cid] = 1 if over[0] * under[1] - over[1] * under[0] > 0 else -1
    return components, signs


def plat_link(word, n):
    return PlanarLink(*plat_crossings(word, n))


def closed_braid_link(word, n):
    from .diagram import braid_crossings

    return PlanarLink(*braid_crossings(word, n))


# --------------------------------------------------------- plat reduction

def _free_reduce(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def _strip_ends(w, n):
    """Remove cap twists, cap exchanges and loops around a cap at either end."""
    changed = True
    w = list(w)
    while changed and w:
        changed = False
        for end in (0, -1):
            if not w:
                break
            x = w[end]
            if abs(x) % 2 == 1:
                w.pop(end)
                changed = True
                continue
            # exchange of two caps: s_{2k} s_{2k-1} s_{2k+1} s_{2k}, all one sign
            seg = w[:4] if end == 0 else w[-4:]
            if len(seg) == 4:
                a = [abs(v) for v in seg]
                same = len({v > 0 for v in seg}) == 1
                k2 = a[0]
                exchange = sorted(a[1:3]) == [k2 - 1, k2 + 1]
                # a strand looping around both legs of a neighbouring cap slides off it
                encircle = a[1] == a[2] and a[1] in (k2 - 1, k2 + 1)
                if same and k2 % 2 == 0 and a[3] == k2 and (exchange or encircle):
                    w = w[4:] if end == 0 else w[:-4]
                    changed = True
    return w


def _destabilize(w, n):
    """
    Remove one cap/cup pair that carries no twists of its own and meets
    the neighbouring strands in at most one crossing: a single crossing
    is a curl, none at all is a split unknot.  Returns (word, strands,
    split unknots) or None.
    """
    if n <= 2:
        return None
    for k in range(1, n // 2 + 1):
        own, left, right = 2 * k - 1, 2 * k - 2, 2 * k
        if any(abs(x) == own for x in w):
            continue
        touching = [i for i, x in enumerate(w) if abs(x) in (left, right)]
        if len(touching) > 1:
            continue
        rest = [x for i, x in enumerate(w) if i not in touching]
        shifted = [x if abs(x) < own else (x - 2 if x > 0 else x + 2) for x in rest]
        return shifted, n - 2, 0 if touching else 1
    return None


def _rewrites(w):
    """Words reachable by one commutation or braid relation."""
    out = []
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if abs(abs(a) - abs(b)) >= 2:
            out.append(w[:i] + [b, a] + w[i + 2:])
    for i in range(len(w) - 2):
        a, b, c = w[i], w[i + 1], w[i + 2]
        if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
            out.append(w[:i] + [b, a, b] + w[i + 3:])
    return out


def _hilden_generators(n):
    gens = [[i] for i in range(1, n, 2)]
    for k in range(2, n - 1, 2):
        gens.append([k, k - 1, k + 1, k])
        gens.append([k, k - 1, k - 1, k])
        gens.append([k, k + 1, k + 1, k])
    out = []
    for g in gens:
        out.append(g)
        out.append([-x for x in reversed(g)])
    return out


def _normalize(w, m, split):
    while True:
        cur = _strip_ends(_free_reduce(list(w)), m)
        d = _destabilize(cur, m)
        if d is None:
            return tuple(cur), m, split
        w, m, extra = d
        split += extra


def reduce_plat(word, n, budget=20000, slack=4):
    """
    Best-first search for a smaller plat presentation of the same link.

    Moves: free reduction, far commutation, braid relations, removal of
    cap twists/exchanges/loops at the ends, destabilization of a cap pair,
    and insertion of a cap-preserving braid at either end (allowed to
    lengthen the word by at most ``slack`` letters).  Returns
    (word, strands, split unknots) of the smallest form found.
    """
    import heapq

    start = _normalize(word, n, 0)
    limit = len(start[0]) + slack
    best = start
    heap = [(start[1], len(start[0]), start)]
    seen = set()
    steps = 0
    while heap and steps < budget:
        _, _, (w, m, split) = heapq.heappop(heap)
        if (w, m) in seen:
            continue
        seen.add((w, m))
        steps += 1
        if (m, len(w)) < (best[1], len(best[0])):
            best = (w, m, split)
        if not w:
            return w, m, split
        lw = list(w)
        nexts = _rewrites(lw)
        for h in _hilden_generators(m):
            nexts.append(h + lw)
            nexts.append(lw + h)
        for r in nexts:
            st = _normalize(r, m, split)
            if len(st[0]) <= limit and (st[0], st[1]) not in seen:
                heapq.heappush(heap, (st[1], len(st[0]), st))
    return best


def certify_unlink(word, n, components):
    """
    "unlink" if the plat reduces to a crossingless diagram, "not an unlink"
    when a coloring count or determinant rules it out, else "unverified".
    """
    link = plat_link(word, n)
    c = link.n_components
    if c != components:
        return "not an unlink"
    if link.count_colorings(3) != 3 ** c:
        return "not an unlink"
    det = link.determinant()
    if (c == 1 and det != 1) or (c > 1 and det != 0):
        return "not an unlink"
    w, m, split = reduce_plat(word, n)
    if not w:
        return "unlink"
    return "unverified"


# --------------------------------------------------------- two-bridge knots

# Schubert fractions p/q of the small two-bridge knots
TWO_BRIDGE_TABLE = {
    "unknot": (1, 0), "3_1": (3, 1), "4_1": (5, 2), "5_1": (5, 1), "5_2": (7, 2),
    "6_1": (9, 2), "6_2": (11, 3), "6_3": (13, 5), "7_1": (7, 1), "7_2": (11, 2),
    "7_3": (13, 3), "7_4": (15, 4), "7_5": (17, 5), "7_6": (19, 8), "7_7": (21, 8),
}


def four_plat_fraction(word):
    """
    Schubert invariant (p, q) of the plat closure of a 4-strand braid:
    the caps form the tangle 1/0, the outer generators add horizontal
    twists and the middle one vertical twists.
    """
    a, b = 1, 0
    for gen in word:
        e = 1 if gen > 0 else -1
        if abs(gen) in (1, 3):
            a += e * b
        elif abs(gen) == 2:
            b -= e * a
        else:
            raise DiagramError(f"generator {gen} is not on 4 strands")
    p = abs(b)
    q = (a % p) if p else 1
    return p, q


def same_two_bridge(x, y, up_to_mirror=True):
    p, q = x
    r, s = y
    if p != r:
        return False
    if p <= 1:
        return True
    cands = {q % p, pow(q, -1, p) if _coprime(q, p) else None}
    if up_to_mirror:
        cands |= {(-c) % p for c in cands if c is not None}
    return s % p in cands


def _coprime(a, b):
    while b:
        a, b = b, a % b
    return abs(a) == 1


def name_two_bridge(pq):
    for name, ref in TWO_BRIDGE_TABLE.items():
        if same_two_bridge(pq, ref):
            return name
    return f"b({pq[0]},{pq[1]})"


def tangle_cap_colors(word, n, endpoint_colors, p=3):
    """
    Propagate Fox colors from the endpoints of a capped tangle up to its
    caps.  Returns (colors at the top of the braid, ok) where ok says
    both legs of every cap got the same color.
    """
    if len(endpoint_colors) != n:
        raise DiagramError(f"need {n} endpoint colors")
    c = [x % p for x in endpoint_colors]
    for gen in reversed(word):
        i = abs(gen) - 1
        lo, hi = c[i], c[i + 1]
        if gen > 0:
            c[i], c[i + 1] = hi, (2 * hi - lo) % p
        else:
            c[i], c[i + 1] = (2 * lo - hi) % p, lo
    top = tuple(x if x else p for x in c)
    ok = all(top[2 * k] == top[2 * k + 1] for k in range(n // 2))
    return top, ok
