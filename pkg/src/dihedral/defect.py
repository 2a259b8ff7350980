"""
Anchor-path monodromies, choice of kernel curves, the matrix of their
linking numbers and the signature defect.

Monodromy convention
--------------------
An anchor path runs from a point q on the zeroth knot arc to a point r on
the zeroth arc of a curve, passing under knot arcs a_1, ..., a_k in that
order.  Its monodromy is the composite sigma_k o ... o sigma_1 of the
reflections attached to the colors of those arcs (usual right-to-left
composition).  Lift indices are read off by evaluating the *inverse* of
that composite at the color c0 of the zeroth arc, i.e. by lifting the
path backwards from r.  On the 6_1 example this reproduces both the
expected product (123) and the value 3 at c0 = 1.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .diagram import reflect

BETA = "beta"


class DefectError(ValueError):
    pass


@dataclass(frozen=True)
class AnchorPath:
    """Arcs crossed under, in order from q to r.

    When no diagram is available the path may be given by the colors of
    the crossed arcs instead (``crossed_colors``).
    """
    curve: str
    crossed_arcs: tuple = ()
    crossed_colors: tuple = None

    def colors(self, code=None):
        if self.crossed_colors is not None:
            return tuple(self.crossed_colors)
        if code is None:
            raise DefectError(f"anchor path for {self.curve!r} needs a diagram")
        m = code.m
        for a in self.crossed_arcs:
            if not 0 <= a < m:
                raise DefectError(f"anchor path for {self.curve!r}: invalid arc {a}")
        return tuple(code.alpha_c[a] for a in self.crossed_arcs)


@dataclass(frozen=True)
class Monodromy:
    """A permutation of {1..p}; ``perm[s - 1]`` is the image of s."""
    perm: tuple

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise DefectError(f"{self.perm} is not a bijection")

    @classmethod
    def identity(cls, p=3):
        return cls(tuple(range(1, p + 1)))

    @classmethod
    def from_colors(cls, colors, p=3):
        """Composite sigma_k o ... o sigma_1 of the reflections for colors c_1..c_k."""
        images = []
        for s in range(1, p + 1):
            for c in colors:
                s = reflect(c, s, p)
            images.append(s)
        return cls(tuple(images))

    def __call__(self, s):
        return self.perm[s - 1]

    def inverse(self):
        inv = [0] * len(self.perm)
        for i, x in enumerate(self.perm):
            inv[x - 1] = i + 1
        return Monodromy(tuple(inv))

    def evaluate(self, c0):
        """Lift index used by the kernel-curve rule."""
        return self.inverse()(c0)

    def cycles(self):
        seen, out = set(), []
        for s in range(1, len(self.perm) + 1):
            if s in seen or self(s) == s:
                seen.add(s)
                continue
            cyc = [s]
            seen.add(s)
            while self(cyc[-1]) != s:
                cyc.append(self(cyc[-1]))
                seen.add(cyc[-1])
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + "".join(map(str, c)) + ")" for c in cyc) if cyc else "Id"


def monodromy(path, code=None, p=3):
    return Monodromy.from_colors(path.colors(code), p)


@dataclass(frozen=True)
class KernelSelection:
    omegas: dict = field(default_factory=dict)   # name -> (j, k), j < k
    beta: tuple = (1, 2)                         # ordered (j, k)

    def __post_init__(self):
        for name, pair in list(self.omegas.items()) + [(BETA, self.beta)]:
            j, k = pair
            if j == k or not all(1 <= x <= 3 for x in pair):
                raise DefectError(f"bad lift pair {pair} for {name!r}")

    def pairs(self):
        out = dict(self.omegas)
        out[BETA] = self.beta
        return out


def select_kernel_curves(monodromies, c0, omega_names=None):
    """
    Lift pairs spanning the kernel.

    ``monodromies`` maps each omega name, and the keys "gamma_r" and
    "gamma_l", to a Monodromy.
    """
    full = {1, 2, 3}
    try:
        mr = monodromies["gamma_r"].evaluate(c0)
        ml = monodromies["gamma_l"].evaluate(c0)
    except KeyError as e:
        raise DefectError(f"missing anchor path {e.args[0]}") from None
    if mr == ml:
        raise DefectError("invalid anchor data: gamma_r and gamma_l evaluate to the same lift")
    (k,) = full - {mr, ml}
    if omega_names is None:
        omega_names = [n for n in monodromies if n not in ("gamma_r", "gamma_l")]
    omegas = {}
    for name in omega_names:
        mu = monodromies[name].evaluate(c0)
        omegas[name] = tuple(sorted(full - {mu}))
    return KernelSelection(omegas, (mr, k))


def _block(blocks, u, v, prefer_transpose=False):
    direct = blocks.get((u, v))
    flipped = blocks.get((v, u))
    if flipped is not None:
        flipped = linalg.transpose(flipped)
    if prefer_transpose:
        direct, flipped = flipped, direct
    if direct is not None:
        return direct
    if flipped is not None:
        return flipped
    raise DefectError(f"missing linking block ({u}, {v})")


def _entries(blocks):
    return {k: (v.entries if hasattr(v, "entries") else v) for k, v in blocks.items()}


def assemble_kernel_matrix(blocks, sel, order=None, resolution="left"):
    """
    Matrix of linking numbers of the differences u^a - u^b.

    ``blocks[(u, v)]`` is the 3x3 matrix lk(u^j, v^k) (lists, tuples or a
    LinkingBlock); a missing (u, v) is taken as the transpose of (v, u).
    Rows follow ``order`` (default: omegas in selection order, then beta).

    For curves meeting on the surface the blocks (u, v) and (v, u)^T can
    differ: each ordering pushes a different curve off the intersection
    point.  ``resolution="left"`` reads the entry above the diagonal from
    (u, v), ``"right"`` from (v, u)^T; the matrix is symmetric either way.
    """
    if resolution not in ("left", "right"):
        raise DefectError(f"unknown resolution {resolution!r}")
    pairs = sel.pairs()
    if order is None:
        order = list(sel.omegas) + [BETA]
    blocks = _entries(blocks)
    n = len(order)
    M = [[0] * n for _ in range(n)]
    for r, u in enumerate(order):
        a, b = pairs[u]
        for s in range(r, n):
            v = order[s]
            c, d = pairs[v]
            B = _block(blocks, u, v, prefer_transpose=resolution == "right")
            x = B[a - 1][c - 1] - B[a - 1][d - 1] - B[b - 1][c - 1] + B[b - 1][d - 1]
            M[r][s] = M[s][r] = x
    return M


def _is_signed_permutation(D):
    nz = [(i, j, x) for i, row in enumerate(D) for j, x in enumerate(row) if x]
    if len(nz) != len(D) or len({x for _, _, x in nz}) != 1 or abs(nz[0][2]) != 1:
        return False
    return len({i for i, _, _ in nz}) == len(D) == len({j for _, j, _ in nz})


def transpose_pairing(blocks):
    """
    Compare every block (u, v) with (v, u)^T.

    Returns {(u, v): None} for pairs that agree and
    {(u, v): (difference, is_resolution_change)} otherwise, where a
    resolution change shows up as plus or minus a permutation matrix.
    """
    blocks = _entries(blocks)
    out = {}
    for (u, v), B in sorted(blocks.items()):
        if u >= v or (v, u) not in blocks:
            continue
        T = linalg.transpose(blocks[(v, u)])
        D = [[B[i][j] - T[i][j] for j in range(len(B))] for i in range(len(B))]
        if any(any(row) for row in D):
            out[(u, v)] = (D, _is_signed_permutation(D))
        else:
            out[(u, v)] = None
    return out


def transfer_defects(blocks):
    """
    Blocks whose row sums or column sums are not all equal.

    Summing lk(u^j, v^k) over all lifts of either curve gives the linking
    number of u with the whole preimage of v, which is the same for every
    lift of u; so a consistent block has constant row and column sums.
    Returns {(u, v): (row sums, column sums)} for the offending blocks.
    """
    out = {}
    for key, B in sorted(_entries(blocks).items()):
        rows = tuple(sum(r) for r in B)
        cols = tuple(sum(c) for c in zip(*B))
        if len(set(rows)) > 1 or len(set(cols)) > 1:
            out[key] = (rows, cols)
    return out


def signature(mat):
    if not linalg.is_symmetric(mat):
        raise DefectError("signature requires a symmetric matrix")
    return linalg.signature(mat)


@dataclass(frozen=True)
class DefectReport:
    p: int
    term_selflink: Fraction
    term_tl: int
    term_sigma_w: int
    kernel_matrix: tuple = ()
    warnings: tuple = ()

    @property
    def xi(self):
        return self.term_selflink + self.term_tl + self.term_sigma_w


def compute_defect(p, self_link, tl_profile, sigma_w, kernel_matrix=()):
    """Xi_p = (p^2 - 1)/(6p) * L(beta, beta) + sum of TL signatures of beta + sigma(W)."""
    term = Fraction(p * p - 1, 6 * p) * self_link
    tl = tl_profile if isinstance(tl_profile, int) else tl_profile.sum
    warnings = []
    total = term + tl + sigma_w
    if total.denominator != 1:
        warnings.append(f"non-integer signature defect {total}")
    km = tuple(tuple(r) for r in kernel_matrix)
    return DefectReport(p, term, tl, sigma_w, km, tuple(warnings))


def cover_signature(sigma_x, p, euler_number, xi):
    """sigma(Y) = 3 sigma(X) - (p - 1)/4 e(B) + Xi_p(alpha)."""
    return 3 * Fraction(sigma_x) - Fraction(p - 1, 4) * euler_number + Fraction(xi)


@dataclass(frozen=True)
class RibbonVerdict:
    xi: Fraction
    bound: Fraction
    obstructed: bool

    def __str__(self):
        if self.obstructed:
            return f"|Xi| = {abs(self.xi)} > {self.bound}: not homotopically ribbon"
        return f"|Xi| = {abs(self.xi)} <= {self.bound}: consistent with homotopically ribbon"


def ribbon_obstruction_check(xi, p):
    bound = Fraction(p - 1, 2)
    xi = Fraction(xi)
    return RibbonVerdict(xi, bound, abs(xi) > bound)
