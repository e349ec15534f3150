"""Exact linear algebra over the supported fields.

Matrices are lists of rows, vectors are lists.  Over Q elimination is
fraction-free (Bareiss) on a denominator-cleared integer matrix; over
F_p and F_{p^k} it is ordinary Gaussian elimination.  Everything is
deterministic: first nonzero column, topmost usable row.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .fields import PrimeField, Rationals, check_same_field


class DimensionMismatch(Exception):
    pass


def zeros(field, m, n):
    z = field.zero
    return [[z] * n for _ in range(m)]


def identity(field, n):
    z, o = field.zero, field.one
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def zero_vec(field, n):
    return [field.zero] * n


def unit_vec(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def mat_vec(field, A, v):
    if A and len(A[0]) != len(v):
        raise DimensionMismatch("%dx%d @ %d" % (len(A), len(A[0]), len(v)))
    add, mul, z = field.add, field.mul, field.zero
    out = []
    for row in A:
        acc = z
        for a, x in zip(row, v):
            if a != z and x != z:
                acc = add(acc, mul(a, x))
        out.append(acc)
    return out


def mat_mul(field, A, B):
    if A and B and len(A[0]) != len(B):
        raise DimensionMismatch("%dx%d @ %dx%d" % (len(A), len(A[0]), len(B), len(B[0])))
    add, mul, z = field.add, field.mul, field.zero
    n = len(B[0]) if B else 0
    Bt = list(zip(*B)) if B else []
    out = []
    for row in A:
        orow = []
        for col in Bt:
            acc = z
            for a, b in zip(row, col):
                if a != z and b != z:
                    acc = add(acc, mul(a, b))
            orow.append(acc)
        out.append(orow)
    return out


def mat_add(field, A, B):
    return [[field.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(field, A, B):
    return [[field.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(field, c, A):
    return [[field.mul(c, a) for a in row] for row in A]


def vec_add(field, u, v):
    return [field.add(a, b) for a, b in zip(u, v)]


def vec_sub(field, u, v):
    return [field.sub(a, b) for a, b in zip(u, v)]


def vec_scale(field, c, v):
    return [field.mul(c, a) for a in v]


def transpose(A):
    return [list(r) for r in zip(*A)] if A else []


def is_zero_vec(field, v):
    z = field.zero
    return all(x == z for x in v)


def flatten(A):
    return [x for row in A for x in row]


def unflatten(v, m, n):
    return [list(v[i * n : (i + 1) * n]) for i in range(m)]


# ---------------------------------------------------------------------------
# reduced row echelon form


def _rref_fp(p, A):
    A = [[x % p for x in row] for row in A]
    m = len(A)
    n = len(A[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pr = None
        for i in range(r, m):
            if A[i][c]:
                pr = i
                break
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = pow(A[r][c], -1, p)
        if inv != 1:
            A[r] = [(x * inv) % p for x in A[r]]
        rowr = A[r]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], rowr)]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _rref_generic(field, A):
    A = [list(row) for row in A]
    m = len(A)
    n = len(A[0]) if m else 0
    z = field.zero
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pr = None
        for i in range(r, m):
            if A[i][c] != z:
                pr = i
                break
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = field.inv(A[r][c])
        A[r] = [field.mul(inv, x) for x in A[r]]
        rowr = A[r]
        for i in range(m):
            if i != r and A[i][c] != z:
                f = A[i][c]
                A[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(A[i], rowr)]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _clear_denominators(row):
    den = 1
    for x in row:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    out = []
    for x in row:
        x = Fraction(x)
        out.append(x.numerator * (den // x.denominator))
    return out


def _rref_q(A):
    """Bareiss fraction-free echelon on the cleared integer matrix, then
    a rational back-pass to reach reduced form."""
    M = [_clear_denominators(row) for row in A]
    m = len(M)
    n = len(M[0]) if m else 0
    pivots = []
    r = 0
    prev = 1
    for c in range(n):
        if r == m:
            break
        pr = None
        for i in range(r, m):
            if M[i][c]:
                pr = i
                break
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        piv = M[r][c]
        for i in range(r + 1, m):
            f = M[i][c]
            M[i] = [(piv * x - f * y) // prev for x, y in zip(M[i], M[r])]
        prev = piv
        pivots.append(c)
        r += 1
    # rational reduced back-pass
    R = [[Fraction(x) for x in M[i]] for i in range(r)]
    for i in range(r - 1, -1, -1):
        c = pivots[i]
        inv = 1 / R[i][c]
        R[i] = [x * inv for x in R[i]]
        for j in range(i):
            f = R[j][c]
            if f:
                R[j] = [x - f * y for x, y in zip(R[j], R[i])]
    return R, pivots


def rref(field, A):
    """Reduced row echelon form: returns (rows, pivot_columns)."""
    if not A:
        return [], []
    if isinstance(field, Rationals):
        return _rref_q(A)
    if isinstance(field, PrimeField):
        return _rref_fp(field.p, A)
    return _rref_generic(field, A)


def rank(field, A):
    return len(rref(field, A)[0])


def kernel(field, A, ncols=None):
    """Basis of the right nullspace of A."""
    if not A:
        return [unit_vec(field, ncols, i) for i in range(ncols or 0)]
    n = len(A[0])
    R, pivots = rref(field, A)
    pivset = set(pivots)
    basis = []
    for c in range(n):
        if c in pivset:
            continue
        v = zero_vec(field, n)
        v[c] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(R[i][c])
        basis.append(v)
    return basis


def solve(field, A, b):
    """Solve A x = b.  Returns (particular, kernel_basis) or None."""
    if len(A) != len(b):
        raise DimensionMismatch("A has %d rows, b has %d" % (len(A), len(b)))
    if not A:
        return [], []
    n = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(field, aug)
    if n in pivots:
        return None
    x = zero_vec(field, n)
    for i, c in enumerate(pivots):
        x[c] = R[i][n]
    ker = []
    pivset = set(pivots)
    for c in range(n):
        if c in pivset:
            continue
        v = zero_vec(field, n)
        v[c] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(R[i][c])
        ker.append(v)
    return x, ker


def solve_linear(A, b, field):
    """Spec-facing wrapper with field checking semantics."""
    if A and any(len(row) != len(A[0]) for row in A):
        raise DimensionMismatch("ragged matrix")
    return solve(field, A, b)


def mat_inverse(field, A):
    """Inverse of a square matrix, or None if singular."""
    n = len(A)
    aug = [list(row) + list(idr) for row, idr in zip(A, identity(field, n))]
    R, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in R]


def is_invertible(field, A):
    n = len(A)
    if not A or len(A[0]) != n:
        return False
    return rank(field, A) == n


def span_rref(field, vectors):
    """Canonical (RREF) basis of the span of the given vectors."""
    if not vectors:
        return []
    R, _ = rref(field, vectors)
    return R


def in_span(field, rref_rows, v):
    """Membership of v in a space given by RREF rows."""
    return is_zero_vec(field, reduce_by_rref(field, rref_rows, v))


def reduce_by_rref(field, rref_rows, v):
    v = list(v)
    z = field.zero
    for row in rref_rows:
        c = next((j for j, x in enumerate(row) if x != z), None)
        if c is None:
            continue
        f = v[c]
        if f != z:
            v = [field.sub(x, field.mul(f, y)) for x, y in zip(v, row)]
    return v


def intersect_spans(field, basis_a, basis_b, n):
    """Basis of span(basis_a) ∩ span(basis_b) inside field^n."""
    if not basis_a or not basis_b:
        return []
    A = transpose(basis_a + basis_b)
    ker = kernel(field, A)
    out = []
    for k in ker:
        v = zero_vec(field, n)
        for c, vec in zip(k[: len(basis_a)], basis_a):
            if c != field.zero:
                v = vec_add(field, v, vec_scale(field, c, vec))
        out.append(v)
    return span_rref(field, out)


class CoordSystem:
    """Expresses vectors in terms of a fixed independent basis."""

    def __init__(self, field, basis):
        self.field = field
        self.basis = [list(b) for b in basis]
        self.n = len(basis[0]) if basis else 0
        self._cols = transpose(self.basis) if basis else []
        # precompute rref of [B^T | I] style solve: keep augmented rref of columns
        if basis:
            aug = [list(row) + list(idr) for row, idr in zip(self._cols, identity(field, self.n))]
            R, pivots = rref(field, aug)
            s = len(basis)
            if pivots[: s] != list(range(s)) or len(R) < s:
                raise ValueError("basis vectors are dependent")
            self._sol = [row[s:] for row in R[:s]]  # s x n: coords = _sol @ v
            self._check = R[s:]  # rows whose rhs must vanish for consistency

    def express(self, v):
        """Coordinates of v in the basis; raises if v is outside the span."""
        if not self.basis:
            if is_zero_vec(self.field, v):
                return []
            raise ValueError("vector outside span")
        f = self.field
        coords = [_dot(f, row, v) for row in self._sol]
        # consistency: rebuild and compare
        rebuilt = zero_vec(f, self.n)
        for c, b in zip(coords, self.basis):
            if c != f.zero:
                rebuilt = vec_add(f, rebuilt, vec_scale(f, c, b))
        if rebuilt != [_canon(f, x) for x in v]:
            raise ValueError("vector outside span")
        return coords


def _dot(field, u, v):
    acc = field.zero
    for a, b in zip(u, v):
        if a != field.zero and b != field.zero:
            acc = field.add(acc, field.mul(a, b))
    return acc


def _canon(field, x):
    return field.add(x, field.zero)
