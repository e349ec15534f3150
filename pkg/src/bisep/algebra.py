"""Finite-dimensional unital associative algebras by structure constants.

An Algebra stores the dense table c[i][j] = coordinate vector of e_i e_j
plus the coordinates of 1.  Construction validates associativity and the
unit law exhaustively; multiplication operator matrices are cached on
first use.  Also here: the algebra constructors used by the catalog and
the radical / semisimplicity machinery.
"""

from __future__ import annotations

from . import linalg as la
from .fields import PrimeField, ExtField, Rationals, check_same_field


class AlgebraError(Exception):
    pass


class NotAssociative(AlgebraError):
    def __init__(self, i, j, k):
        self.witness = (i, j, k)
        super().__init__("(e_%d e_%d) e_%d != e_%d (e_%d e_%d)" % (i, j, k, i, j, k))


class BadUnit(AlgebraError):
    def __init__(self, j):
        self.witness = j
        super().__init__("unit law fails on basis element %d" % j)


class NotAGroup(AlgebraError):
    pass


class Algebra:
    def __init__(self, field, table, unit, basis_names=None, validate=True):
        self.field = field
        self.dim = len(table)
        self.table = [[list(v) for v in row] for row in table]
        self.unit = list(unit)
        if basis_names is None:
            basis_names = ["e%d" % i for i in range(self.dim)]
        self.basis_names = list(basis_names)
        self._left = {}
        self._right = {}
        if validate:
            self.validate()

    # -- structure ---------------------------------------------------------

    def mul_vec(self, x, y):
        """Product of two coordinate vectors."""
        f = self.field
        z = f.zero
        out = [z] * self.dim
        for i, xi in enumerate(x):
            if xi == z:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if yj == z:
                    continue
                c = f.mul(xi, yj)
                for k, t in enumerate(row[j]):
                    if t != z:
                        out[k] = f.add(out[k], f.mul(c, t))
        return out

    def left_mult_basis(self, i):
        """Matrix of left multiplication by e_i."""
        if i not in self._left:
            self._left[i] = [
                [self.table[i][j][k] for j in range(self.dim)] for k in range(self.dim)
            ]
        return self._left[i]

    def right_mult_basis(self, j):
        """Matrix of right multiplication by e_j."""
        if j not in self._right:
            self._right[j] = [
                [self.table[i][j][k] for i in range(self.dim)] for k in range(self.dim)
            ]
        return self._right[j]

    def left_mult(self, x):
        f = self.field
        out = la.zeros(f, self.dim, self.dim)
        for i, xi in enumerate(x):
            if xi == f.zero:
                continue
            L = self.left_mult_basis(i)
            for r in range(self.dim):
                for c in range(self.dim):
                    if L[r][c] != f.zero:
                        out[r][c] = f.add(out[r][c], f.mul(xi, L[r][c]))
        return out

    def right_mult(self, x):
        f = self.field
        out = la.zeros(f, self.dim, self.dim)
        for j, xj in enumerate(x):
            if xj == f.zero:
                continue
            R = self.right_mult_basis(j)
            for r in range(self.dim):
                for c in range(self.dim):
                    if R[r][c] != f.zero:
                        out[r][c] = f.add(out[r][c], f.mul(xj, R[r][c]))
        return out

    def is_invertible_element(self, x):
        return la.is_invertible(self.field, self.left_mult(x))

    def invert_element(self, x):
        inv = la.mat_inverse(self.field, self.left_mult(x))
        if inv is None:
            return None
        return la.mat_vec(self.field, inv, self.unit)

    def validate(self):
        f = self.field
        for row in self.table:
            if len(row) != self.dim or any(len(v) != self.dim for v in row):
                raise AlgebraError("structure table shape mismatch")
        if len(self.unit) != self.dim:
            raise AlgebraError("unit vector length mismatch")
        for j in range(self.dim):
            ej = la.unit_vec(f, self.dim, j)
            if self.mul_vec(self.unit, ej) != ej or self.mul_vec(ej, self.unit) != ej:
                raise BadUnit(j)
        for i in range(self.dim):
            for j in range(self.dim):
                eij = self.table[i][j]
                for k in range(self.dim):
                    left = self.mul_vec(eij, la.unit_vec(f, self.dim, k))
                    right = self.mul_vec(la.unit_vec(f, self.dim, i), self.table[j][k])
                    if left != right:
                        raise NotAssociative(i, j, k)

    # -- derived subspaces -------------------------------------------------

    def center(self):
        """Basis of {x : xe_i = e_ix for all i}."""
        rows = []
        for i in range(self.dim):
            D = la.mat_sub(self.field, self.left_mult_basis(i), self.right_mult_basis(i))
            rows.extend(D)
        return la.kernel(self.field, rows, self.dim)

    def centralizer(self, vectors):
        """Basis of {x : xv = vx for all given v}."""
        rows = []
        for v in vectors:
            D = la.mat_sub(self.field, self.left_mult(v), self.right_mult(v))
            rows.extend(D)
        if not rows:
            return la.identity(self.field, self.dim)
        return la.kernel(self.field, rows, self.dim)

    def radical(self):
        """Basis of the Jacobson radical."""
        f = self.field
        if isinstance(f, Rationals) or f.char > self.dim:
            return self._radical_trace_form()
        if isinstance(f, PrimeField):
            return _radical_friedl_ronyai(self)
        # small characteristic over F_{p^k}: restrict scalars to F_p
        return _radical_ext_field(self)

    def _radical_trace_form(self):
        f = self.field
        n = self.dim
        G = la.zeros(f, n, n)
        for i in range(n):
            Li = self.left_mult_basis(i)
            for j in range(n):
                P = la.mat_mul(f, Li, self.left_mult_basis(j))
                tr = f.zero
                for k in range(n):
                    tr = f.add(tr, P[k][k])
                G[j][i] = tr
        return la.kernel(f, G, n)

    def is_semisimple(self):
        return not self.radical()

    def is_qf_ring(self, budget=None):
        """Self-injectivity: the regular right module lies in add of its linear dual."""
        from . import modules

        return modules.regular_in_add_of_dual(self)

    def elements(self):
        """All coordinate vectors (finite fields only)."""
        f = self.field
        els = list(f.elements())
        idx = [0] * self.dim

        def rec(pos):
            if pos == self.dim:
                yield []
                return
            for rest in rec(pos + 1):
                for e in els:
                    yield [e] + rest

        return rec(0)


# ---------------------------------------------------------------------------
# constructors


def make_algebra(field, structure, unit, basis_names=None):
    return Algebra(field, structure, unit, basis_names=basis_names)


def make_algebra_sparse(field, dim, triples, unit, basis_names=None):
    """Structure from sparse (i, j, k, coeff) entries."""
    table = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, k, c in triples:
        table[i][j][k] = field.add(table[i][j][k], c)
    return Algebra(field, table, unit, basis_names=basis_names)


def matrix_algebra(field, n):
    """M_n over the field; basis = matrix units e_{rs}, index r*n+s."""
    dim = n * n
    z, o = field.zero, field.one
    table = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for r in range(n):
        for s in range(n):
            for t in range(n):
                for u in range(n):
                    if s == t:
                        table[r * n + s][t * n + u][r * n + u] = o
    unit = [z] * dim
    for r in range(n):
        unit[r * n + r] = o
    names = ["E%d%d" % (r + 1, s + 1) for r in range(n) for s in range(n)]
    return Algebra(field, table, unit, basis_names=names)


def _matrix_subalgebra(field, n, positions):
    """Subalgebra of M_n spanned by matrix units at the given (r,s) positions."""
    dim = len(positions)
    index = {pos: i for i, pos in enumerate(positions)}
    z, o = field.zero, field.one
    table = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for a, (r, s) in enumerate(positions):
        for b, (t, u) in enumerate(positions):
            if s == t and (r, u) in index:
                table[a][b][index[(r, u)]] = o
    unit = [z] * dim
    for r in range(n):
        if (r, r) in index:
            unit[index[(r, r)]] = o
    names = ["E%d%d" % (r + 1, s + 1) for r, s in positions]
    return Algebra(field, table, unit, basis_names=names)


def upper_triangular(field, n):
    positions = [(r, s) for r in range(n) for s in range(r, n)]
    return _matrix_subalgebra(field, n, positions)


def diagonal_algebra(field, n):
    positions = [(r, r) for r in range(n)]
    return _matrix_subalgebra(field, n, positions)


def validate_cayley_table(table):
    n = len(table)
    for row in table:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise NotAGroup("table is not n x n over 0..n-1")
    e = None
    for i in range(n):
        if all(table[i][j] == j for j in range(n)) and all(
            table[j][i] == j for j in range(n)
        ):
            e = i
            break
    if e is None:
        raise NotAGroup("no identity element")
    for i in range(n):
        if not any(table[i][j] == e for j in range(n)):
            raise NotAGroup("element %d has no inverse" % i)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise NotAGroup("associativity fails at (%d,%d,%d)" % (i, j, k))
    return e


def group_algebra(field, cayley_table, names=None):
    e = validate_cayley_table(cayley_table)
    n = len(cayley_table)
    z, o = field.zero, field.one
    table = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            table[i][j][cayley_table[i][j]] = o
    unit = [z] * n
    unit[e] = o
    if names is None:
        names = ["g%d" % i for i in range(n)]
    return Algebra(field, table, unit, basis_names=names)


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def _perm_group_table(perms):
    index = {p: i for i, p in enumerate(perms)}
    return [
        [index[tuple(p[q[x]] for x in range(len(p)))] for q in perms] for p in perms
    ]


def s3_table():
    """Symmetric group on 3 letters; element 0 is the identity."""
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    return _perm_group_table(perms)


def d4_table():
    """Dihedral group of order 8 as permutations of the square's corners."""
    r = (1, 2, 3, 0)
    s = (1, 0, 3, 2)
    ident = (0, 1, 2, 3)

    def compose(p, q):
        return tuple(p[q[x]] for x in range(4))

    perms = [ident]
    for _ in range(3):
        perms.append(compose(r, perms[-1]))
    perms += [compose(p, s) for p in perms[:4]]
    return _perm_group_table(perms)


def v4_table():
    """Klein four group."""
    return [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]


def direct_sum(A, B):
    check_same_field(A.field, B.field)
    f = A.field
    n, m = A.dim, B.dim
    dim = n + m
    z = f.zero
    table = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                table[i][j][k] = A.table[i][j][k]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                table[n + i][n + j][n + k] = B.table[i][j][k]
    unit = list(A.unit) + list(B.unit)
    names = ["a." + s for s in A.basis_names] + ["b." + s for s in B.basis_names]
    return Algebra(f, table, unit, basis_names=names)


def tensor_over_field(A, B):
    """A (x) B with basis e_i (x) f_j at index i*dim(B)+j."""
    check_same_field(A.field, B.field)
    f = A.field
    n, m = A.dim, B.dim
    dim = n * m
    z = f.zero
    table = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for i1 in range(n):
        for j1 in range(m):
            for i2 in range(n):
                for j2 in range(m):
                    pa = A.table[i1][i2]
                    pb = B.table[j1][j2]
                    row = table[i1 * m + j1][i2 * m + j2]
                    for k1 in range(n):
                        if pa[k1] == z:
                            continue
                        for k2 in range(m):
                            if pb[k2] == z:
                                continue
                            row[k1 * m + k2] = f.add(row[k1 * m + k2], f.mul(pa[k1], pb[k2]))
    unit = [z] * dim
    for k1, u1 in enumerate(A.unit):
        if u1 == z:
            continue
        for k2, u2 in enumerate(B.unit):
            if u2 == z:
                continue
            unit[k1 * m + k2] = f.mul(u1, u2)
    return Algebra(f, table, unit)


def opposite(A):
    table = [[A.table[j][i] for j in range(A.dim)] for i in range(A.dim)]
    return Algebra(A.field, table, A.unit, basis_names=A.basis_names)


def enveloping(S, R):
    """S (x) R^op; (S,R)-bimodules are its left modules."""
    return tensor_over_field(S, opposite(R))


def trivial_extension(R, left_act, right_act, mult):
    """Algebra on R + I with (r,x)(r',x') = (rr', rx' + xr' + xx').

    left_act[i]/right_act[i]: action matrix of basis e_i of R on I;
    mult[a][b]: product of I-basis elements, a vector in I.
    Associativity of the result is validated by construction.
    """
    f = R.field
    n = R.dim
    m = len(mult)
    dim = n + m
    z = f.zero
    table = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                table[i][j][k] = R.table[i][j][k]
    for i in range(n):
        L = left_act[i]
        for b in range(m):
            for k in range(m):
                table[i][n + b][n + k] = L[k][b]
    for a in range(m):
        for j in range(n):
            Rj = right_act[j]
            for k in range(m):
                table[n + a][j][n + k] = Rj[k][a]
    for a in range(m):
        for b in range(m):
            for k in range(m):
                table[n + a][n + b][n + k] = mult[a][b][k]
    unit = list(R.unit) + [z] * m
    names = list(R.basis_names) + ["i%d" % a for a in range(m)]
    return Algebra(f, table, unit, basis_names=names)


def ideal_as_bimodule(R, ideal_basis, inherit_mult=True):
    """Present an ideal (given by a basis of vectors in R) as bimodule data
    for trivial_extension, in the ideal's own coordinates."""
    f = R.field
    cs = la.CoordSystem(f, ideal_basis)
    m = len(ideal_basis)
    left_act, right_act = [], []
    for i in range(R.dim):
        ei = la.unit_vec(f, R.dim, i)
        L = [cs.express(R.mul_vec(ei, v)) for v in ideal_basis]
        Rr = [cs.express(R.mul_vec(v, ei)) for v in ideal_basis]
        left_act.append(la.transpose(L) if L else [])
        right_act.append(la.transpose(Rr) if Rr else [])
    if inherit_mult:
        mult = [
            [cs.express(R.mul_vec(u, v)) for v in ideal_basis] for u in ideal_basis
        ]
    else:
        mult = [[[f.zero] * m for _ in range(m)] for _ in range(m)]
    return left_act, right_act, mult


# ---------------------------------------------------------------------------
# sub/quotient structures


def subalgebra_closure(A, generators):
    """RREF basis of the unital subalgebra generated by the given vectors."""
    f = A.field
    span = la.span_rref(f, [A.unit] + [list(g) for g in generators])
    while True:
        new = list(span)
        for u in span:
            for v in span:
                new.append(A.mul_vec(u, v))
        new = la.span_rref(f, new)
        if len(new) == len(span):
            return new
        span = new


def subalgebra(A, basis):
    """Algebra structure on a multiplicatively closed independent basis.

    Returns (S, iota) with iota the (dim A x dim S) inclusion matrix."""
    f = A.field
    cs = la.CoordSystem(f, basis)
    dim = len(basis)
    table = [[cs.express(A.mul_vec(u, v)) for v in basis] for u in basis]
    unit = cs.express(A.unit)
    S = Algebra(f, table, unit)
    iota = la.transpose(basis)
    return S, iota


def ideal_closure(A, vectors):
    """RREF basis of the two-sided ideal generated by the given vectors."""
    f = A.field
    span = la.span_rref(f, [list(v) for v in vectors])
    while True:
        new = list(span)
        for i in range(A.dim):
            ei = la.unit_vec(f, A.dim, i)
            for v in span:
                new.append(A.mul_vec(ei, v))
                new.append(A.mul_vec(v, ei))
        new = la.span_rref(f, new)
        if len(new) == len(span):
            return span
        span = new


def is_ideal(A, basis):
    f = A.field
    rr = la.span_rref(f, basis)
    for i in range(A.dim):
        ei = la.unit_vec(f, A.dim, i)
        for v in rr:
            if not la.in_span(f, rr, A.mul_vec(ei, v)):
                return False
            if not la.in_span(f, rr, A.mul_vec(v, ei)):
                return False
    return True


def product_span(A, basis_u, basis_v):
    """RREF basis of span{uv : u in U, v in V}."""
    prods = [A.mul_vec(u, v) for u in basis_u for v in basis_v]
    return la.span_rref(A.field, prods)


def is_nilpotent_space(A, basis):
    """Whether the span is nilpotent under powering (at most dim A steps)."""
    cur = la.span_rref(A.field, basis)
    for _ in range(A.dim + 1):
        if not cur:
            return True
        cur = product_span(A, cur, cur)
    return False


def quotient_by_ideal(A, ideal_basis):
    """Quotient algebra A / I and the projection matrix (dim Q x dim A)."""
    f = A.field
    rr = la.span_rref(f, ideal_basis) if ideal_basis else []
    pivots = []
    z = f.zero
    for row in rr:
        pivots.append(next(j for j, x in enumerate(row) if x != z))
    keep = [c for c in range(A.dim) if c not in set(pivots)]

    def project(v):
        red = la.reduce_by_rref(f, rr, v)
        return [red[c] for c in keep]

    dim = len(keep)
    table = [
        [
            project(A.mul_vec(la.unit_vec(f, A.dim, keep[a]), la.unit_vec(f, A.dim, keep[b])))
            for b in range(dim)
        ]
        for a in range(dim)
    ]
    unit = project(A.unit)
    Q = Algebra(f, table, unit)
    proj = [project(la.unit_vec(f, A.dim, j)) for j in range(A.dim)]
    return Q, la.transpose(proj) if proj else []


# ---------------------------------------------------------------------------
# radical in small characteristic (Friedl-Ronyai p-power trace refinement)


def _int_lift_matrix(M, p):
    return [[int(x) % p for x in row] for row in M]


def _int_mat_mul(A, B):
    n = len(B[0])
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def _int_mat_pow(A, e):
    n = len(A)
    R = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    while e:
        if e & 1:
            R = _int_mat_mul(R, A)
        A = _int_mat_mul(A, A)
        e >>= 1
    return R


def _radical_friedl_ronyai(A):
    """Jacobson radical over a prime field F_p with p <= dim, by the
    p-power trace refinement chain on integer lifts of the regular
    representation."""
    f = A.field
    p = f.p
    n = A.dim
    steps = 1
    while p ** steps < n:
        steps += 1
    steps += 1
    basis = la.identity(f, n)
    lifts = [_int_lift_matrix(A.left_mult(x), p) for x in basis]
    for i in range(1, steps + 1):
        if not basis:
            return []
        q = p ** (i - 1)
        rows = []
        for Y in lifts:
            row = []
            for X in lifts:
                P = _int_mat_pow(_int_mat_mul(X, Y), q)
                tr = sum(P[d][d] for d in range(n))
                assert tr % q == 0, "trace divisibility violated"
                row.append((tr // q) % p)
            rows.append(row)
        ker = la.kernel(f, rows, len(basis))
        new_basis = []
        for k in ker:
            v = la.zero_vec(f, n)
            for c, b in zip(k, basis):
                if c:
                    v = la.vec_add(f, v, la.vec_scale(f, c, b))
            new_basis.append(v)
        basis = la.span_rref(f, new_basis) if new_basis else []
        lifts = [_int_lift_matrix(A.left_mult(x), p) for x in basis]
    return basis


def _radical_ext_field(A):
    """Radical over F_{p^k} with small p via restriction of scalars to F_p."""
    f = A.field
    p, k = f.p, f.k
    fp = PrimeField(p)
    n = A.dim
    # basis of the F_p-algebra: e_i * x^t  ->  index i*k + t
    xs = [f._norm([0] * t + [1]) for t in range(k)]
    dim = n * k

    def to_fp(vec):
        out = []
        for coord in vec:
            out.extend(int(c) % p for c in coord)
        return out

    table = [[None] * dim for _ in range(dim)]
    for i in range(n):
        for t in range(k):
            ei = [f.zero] * n
            ei[i] = xs[t]
            for j in range(n):
                for u in range(k):
                    ej = [f.zero] * n
                    ej[j] = xs[u]
                    table[i * k + t][j * k + u] = to_fp(A.mul_vec(ei, ej))
    Ap = Algebra(fp, table, to_fp(A.unit), validate=False)
    rad_p = Ap.radical()
    # map F_p-vectors back to F_{p^k}^n and take the F_{p^k} span
    back = []
    for v in rad_p:
        vec = []
        for i in range(n):
            vec.append(f._norm(list(v[i * k : (i + 1) * k])))
        back.append(vec)
    return la.span_rref(f, back)
