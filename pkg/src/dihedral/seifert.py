"""
Seifert forms, mod p characteristic knots and Tristram-Levine signatures.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from . import linalg


@dataclass(frozen=True)
class SeifertForm:
    L: tuple
    basis_labels: tuple = ()

    def __post_init__(self):
        L = tuple(tuple(int(x) for x in row) for row in self.L)
        object.__setattr__(self, "L", L)
        if not linalg.is_square(L):
            raise ValueError("Seifert matrix must be square")
        if len(L) % 2:
            raise ValueError("Seifert matrix must have even size")
        if not self.basis_labels:
            object.__setattr__(self, "basis_labels", tuple(f"e{i}" for i in range(len(L))))

    @property
    def genus(self):
        return len(self.L) // 2

    @classmethod
    def unknot(cls):
        return cls(())


@dataclass(frozen=True)
class CharacteristicKnot:
    beta: tuple
    p: int
    self_linking: int
    beta_seifert: SeifertForm = field(default_factory=SeifertForm.unknot)


@dataclass(frozen=True)
class TLSignatureProfile:
    p: int
    values: tuple

    @property
    def sum(self):
        return sum(self.values)


def symmetrize(form):
    L = form.L if isinstance(form, SeifertForm) else form
    return [[L[i][j] + L[j][i] for j in range(len(L))] for i in range(len(L))]


def _is_char(Q, v, p):
    return all(x % p == 0 for x in linalg.mat_vec(Q, v))


def find_characteristic_knots(Q, p):
    """
    Primitive integer vectors beta, one per line of ker(Q mod p), with
    Q beta = 0 mod p.  Each residue vector is lifted to the representative
    with entries in (-p/2, p/2] and then made primitive.
    """
    if not linalg.is_symmetric(Q):
        raise ValueError("form must be symmetric")
    basis = linalg.nullspace_mod_p(Q, p)
    if not basis:
        return []
    lines = set()
    out = []
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        if not any(coeffs):
            continue
        v = [sum(a * b[i] for a, b in zip(coeffs, basis)) % p for i in range(len(Q))]
        # normalise the line: scale so the first nonzero entry is 1
        lead = next(x for x in v if x)
        inv = pow(lead, -1, p)
        key = tuple((x * inv) % p for x in v)
        if key in lines:
            continue
        lines.add(key)
        lifted = [x - p if x > p // 2 else x for x in key]
        beta = linalg.primitive(lifted)
        if not _is_char(Q, beta, p):  # primitive rescaling by a unit keeps the kernel
            continue
        out.append(tuple(beta))
    return sorted(out, key=lambda b: (sum(abs(x) for x in b), b))


def self_linking(form, beta):
    L = form.L if isinstance(form, SeifertForm) else form
    if len(beta) != len(L):
        raise ValueError("dimension mismatch")
    return linalg.bilinear(beta, L, beta)


class QuadraticNumber:
    """Element a + b*sqrt(d) of a real quadratic field, exact."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=3):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            return other
        return QuadraticNumber(other, 0, self.d)

    def __add__(self, o):
        o = self._coerce(o)
        return QuadraticNumber(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._coerce(o)
        return QuadraticNumber(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __mul__(self, o):
        o = self._coerce(o)
        return QuadraticNumber(self.a * o.a + self.d * self.b * o.b,
                               self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._coerce(o)
        n = o.a * o.a - o.d * o.b * o.b
        if n == 0:
            raise ZeroDivisionError
        conj = QuadraticNumber(o.a / n, -o.b / n, self.d)
        return self * conj

    def sign(self):
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: compare a^2 with d b^2
        s = (a * a > d * b * b) - (a * a < d * b * b)
        return s if a > 0 else -s

    def __eq__(self, o):
        o = self._coerce(o)
        return self.a == o.a and self.b == o.b

    def __ne__(self, o):
        return not self == o

    def __gt__(self, o):
        return (self - o).sign() > 0

    def __lt__(self, o):
        return (self - o).sign() < 0

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        return f"({self.a} + {self.b}*sqrt({self.d}))"


def _realified(A, re_scale, im_scale):
    """Real symmetric 2n x 2n matrix of the Hermitian form re_scale*(A+A^T) + i*im_scale*(A^T-A)."""
    n = len(A)
    S = [[re_scale * (A[i][j] + A[j][i]) for j in range(n)] for i in range(n)]
    K = [[im_scale * (A[j][i] - A[i][j]) for j in range(n)] for i in range(n)]
    top = [S[i] + [-x for x in K[i]] for i in range(n)]
    bottom = [K[i] + S[i] for i in range(n)]
    return top + bottom


def tristram_levine_value(A, p, i):
    """Signature of (1 - w)A + (1 - conj w)A^T at w = exp(2 pi i k/p), k = i."""
    n = len(A)
    if n == 0:
        return 0
    k = i % p
    if k == 0:
        return 0
    if p == 3:
        # 1 - w = 3/2 -+ (sqrt3/2) i; Hermitian matrix = (3/2)(A + A^T) + i*(-+sqrt3/2)(A - A^T)
        s = 1 if k == 1 else -1
        half3 = QuadraticNumber(Fraction(3, 2), 0)
        im = QuadraticNumber(0, Fraction(s, 2))
        M = _realified(A, half3, im)
        d = linalg.congruence_diagonal(M, QuadraticNumber(0))
        sig = sum(1 for x in d if x.sign() > 0) - sum(1 for x in d if x.sign() < 0)
        return sig // 2
    return _tl_numeric(A, p, k)


def _tl_numeric(A, p, k, dps=60):
    # high-precision eigenvalues; an eigenvalue this close to zero is treated as zero
    with mpmath.workdps(dps):
        w = mpmath.exp(2j * mpmath.pi * k / p)
        n = len(A)
        H = mpmath.matrix(n, n)
        for r in range(n):
            for c in range(n):
                H[r, c] = (1 - w) * A[r][c] + (1 - mpmath.conj(w)) * A[c][r]
        ev = mpmath.eighe(H, eigvals_only=True) if hasattr(mpmath, "eighe") else mpmath.eigh(H, eigvals_only=True)
        tol = mpmath.mpf(10) ** (-(dps // 2))
        return sum(1 for x in ev if x > tol) - sum(1 for x in ev if x < -tol)


def tristram_levine(beta_form, p):
    A = beta_form.L if isinstance(beta_form, SeifertForm) else beta_form
    return TLSignatureProfile(p, tuple(tristram_levine_value(A, p, i) for i in range(1, p)))


def characteristic_knot(form, beta, p, beta_seifert=None):
    """Package a characteristic vector with its self-linking; checks the kernel condition."""
    Q = symmetrize(form)
    beta = tuple(beta)
    if not _is_char(Q, beta, p):
        raise ValueError(f"{beta} is not a mod {p} characteristic vector")
    if linalg.primitive(beta) != list(beta) and linalg.primitive(beta) != [-x for x in beta]:
        raise ValueError(f"{beta} is not primitive")
    return CharacteristicKnot(beta, p, self_linking(form, beta),
                              beta_seifert or SeifertForm.unknot())
