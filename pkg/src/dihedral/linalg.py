"""
Exact linear algebra over Z, Q and Z/p.

Everything here works on lists of lists of ints or Fractions; nothing
touches floating point.  Matrices are small (a few dozen rows at most),
so plain Python is fast enough.
"""

from fractions import Fraction
from math import gcd


def as_matrix(M):
    return [list(row) for row in M]


def transpose(M):
    return [list(col) for col in zip(*M)] if M else []


def is_square(M):
    return all(len(row) == len(M) for row in M)


def is_symmetric(M):
    n = len(M)
    return is_square(M) and all(M[i][j] == M[j][i] for i in range(n) for j in range(i))


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_neg(A):
    return [[-a for a in row] for row in A]


def mat_mul(A, B):
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def block_diag(A, B):
    n, m = len(A), len(B)
    out = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        out[i][:n] = list(A[i])
    for i in range(m):
        out[n + i][n:] = list(B[i])
    return out


def bilinear(v, M, w):
    return sum(v[i] * M[i][j] * w[j] for i in range(len(v)) for j in range(len(w)))


def determinant(M):
    """Exact determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = as_matrix(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def congruence_diagonal(M, field_zero=0):
    """
    Diagonalize a symmetric matrix by simultaneous row/column operations.

    Works for any ordered-field element type supporting +, -, *, / and
    comparison with zero (Fraction, or QuadraticNumber below).  Returns the
    diagonal entries of a congruent diagonal matrix.
    """
    n = len(M)
    A = [[M[i][j] for j in range(n)] for i in range(n)]
    diag = []
    size = n
    while size:
        # choose a nonzero diagonal pivot, or manufacture one from an
        # off-diagonal entry via e_i <- e_i + e_j
        piv = next((i for i in range(size) if A[i][i] != field_zero), None)
        if piv is None:
            pair = next(((i, j) for i in range(size) for j in range(i + 1, size)
                         if A[i][j] != field_zero), None)
            if pair is None:
                diag.extend([field_zero] * size)
                break
            i, j = pair
            for k in range(size):
                A[i][k] = A[i][k] + A[j][k]
            for k in range(size):
                A[k][i] = A[k][i] + A[k][j]
            piv = i
        p = A[piv][piv]
        # swap pivot to the last position and eliminate
        last = size - 1
        A[piv], A[last] = A[last], A[piv]
        for row in A:
            row[piv], row[last] = row[last], row[piv]
        for i in range(last):
            f = A[i][last] / p
            if f != field_zero:
                for k in range(last):
                    A[i][k] = A[i][k] - f * A[last][k]
        for i in range(last):
            A[i][last] = field_zero
            A[last][i] = field_zero
        diag.append(p)
        A = [row[:last] for row in A[:last]]
        size = last
    return diag


def signature(M):
    """
    Signature of a symmetric rational matrix, computed exactly.

    Null directions contribute zero.
    """
    if not is_symmetric(M):
        raise ValueError("signature requires a symmetric matrix")
    F = [[Fraction(x) for x in row] for row in M]
    d = congruence_diagonal(F, Fraction(0))
    return sum(1 for x in d if x > 0) - sum(1 for x in d if x < 0)


def rank_q(M):
    A = [[Fraction(x) for x in row] for row in M]
    return len(_rref(A)[1])


def _rref(A):
    """Row-reduce A (list of Fraction rows) in place; return (A, pivot columns)."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def solve_q(columns, target):
    """
    Find rational coefficients x with sum_k x[k] * columns[k] == target.

    Returns None when target is not in the span.  Free variables are set
    to zero.
    """
    n = len(target)
    k = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    A, pivots = _rref(aug)
    if k in pivots:
        return None
    x = [Fraction(0)] * k
    for row, c in enumerate(pivots):
        x[c] = A[row][k]
    return x


class RowSpace:
    """
    Rational row space kept in fully reduced echelon form, stored sparsely.

    Every stored row has a 1 in its pivot column and no entry in any other
    pivot column, so ``reduce`` gives a canonical normal form modulo the
    span.
    """

    def __init__(self, rows=()):
        self.rows = {}
        for r in rows:
            self.add(r)

    def copy(self):
        other = RowSpace()
        other.rows = {c: dict(r) for c, r in self.rows.items()}
        return other

    @staticmethod
    def _sparse(v):
        if isinstance(v, dict):
            return {k: Fraction(x) for k, x in v.items() if x}
        return {i: Fraction(x) for i, x in enumerate(v) if x}

    def reduce(self, v):
        v = self._sparse(v)
        for c in [c for c in v if c in self.rows]:
            f = v.get(c)
            if not f:
                continue
            for k, x in self.rows[c].items():
                y = v.get(k, 0) - f * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
        return v

    def add(self, v):
        v = self.reduce(v)
        if not v:
            return False
        c = min(v)
        inv = 1 / v[c]
        v = {k: x * inv for k, x in v.items()}
        for row in self.rows.values():
            f = row.get(c)
            if f:
                for k, x in v.items():
                    y = row.get(k, 0) - f * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        self.rows[c] = v
        return True

    def __len__(self):
        return len(self.rows)


def nullspace_mod_p(M, p):
    """Basis of the right kernel of M over Z/p, as lists of residues in 0..p-1."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    A = [[x % p for x in row] for row in M]
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if A[i][c]), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [(x * inv) % p for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * cols
        v[fcol] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-A[row][fcol]) % p
        basis.append(v)
    return basis


def primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return list(v)
    return [x // g for x in v]


def smith_normal_form(M):
    """
    Smith normal form with transforms: returns (D, U, V) with U*M*V == D.

    U and V are unimodular integer matrices.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    D = as_matrix(M)
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(A, i, j):
        A[i], A[j] = A[j], A[i]

    def swap_cols(A, i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]

    def add_row(A, src, dst, f):
        A[dst] = [a + f * b for a, b in zip(A[dst], A[src])]

    def add_col(A, src, dst, f):
        for row in A:
            row[dst] += f * row[src]

    for t in range(min(m, n)):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        while True:
            _, i, j = min(nz)
            swap_rows(D, t, i); swap_rows(U, t, i)
            swap_cols(D, t, j); swap_cols(V, t, j)
            done = True
            for i in range(t + 1, m):
                q = D[i][t] // D[t][t]
                if q:
                    add_row(D, t, i, -q); add_row(U, t, i, -q)
                if D[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = D[t][j] // D[t][t]
                if q:
                    add_col(D, t, j, -q); add_col(V, t, j, -q)
                if D[t][j]:
                    done = False
            if done:
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if D[i][j] % D[t][t]), None)
                if bad is None:
                    break
                add_row(D, bad[0], t, 1); add_row(U, bad[0], t, 1)
            nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return D, U, V


def inverse_unimodular(V):
    """Integer inverse of a unimodular matrix."""
    n = len(V)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(V)]
    A, pivots = _rref(A)
    if len(pivots) < n or any(p >= n for p in pivots):
        raise ValueError("matrix is not invertible")
    inv = [[A[i][n + j] for j in range(n)] for i in range(n)]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]
