"""Modules and bimodules over structure-constant algebras.

A left Module stores one action matrix per algebra basis element; a
Bimodule stores both families.  Hom spaces, tensor products over a
middle algebra, duals, Casimir subspaces and the add-summand primitive
all reduce to exact kernel computations on the flattened map entries.
"""

from __future__ import annotations

from . import linalg as la
from .algebra import Algebra, AlgebraError, opposite, tensor_over_field
from .fields import check_same_field


class ModuleError(Exception):
    pass


class AlgebraMismatch(ModuleError):
    pass


class NotAnExtension(ModuleError):
    pass


class Extension:
    """Algebra map iota: S -> R given by its coordinate matrix
    (column j = coordinates of iota(s_j) in R)."""

    def __init__(self, S, R, iota, validate=True):
        check_same_field(S.field, R.field)
        self.S = S
        self.R = R
        self.iota = [list(row) for row in iota]
        if validate:
            self.validate()
        self.proper = la.rank(R.field, self.iota) == S.dim

    def validate(self):
        f = self.R.field
        if len(self.iota) != self.R.dim or any(len(r) != self.S.dim for r in self.iota):
            raise NotAnExtension("iota has wrong shape")
        if la.mat_vec(f, self.iota, self.S.unit) != [f.add(x, f.zero) for x in self.R.unit]:
            raise NotAnExtension("iota does not preserve the unit")
        cols = la.transpose(self.iota)
        for i in range(self.S.dim):
            for j in range(self.S.dim):
                lhs = la.mat_vec(f, self.iota, self.S.table[i][j])
                rhs = self.R.mul_vec(cols[i], cols[j])
                if lhs != rhs:
                    raise NotAnExtension(
                        "iota(s_%d s_%d) != iota(s_%d) iota(s_%d)" % (i, j, i, j)
                    )

    def embed(self, svec):
        return la.mat_vec(self.R.field, self.iota, svec)

    @property
    def is_identity(self):
        return self.S.dim == self.R.dim and self.proper

    def embedded_basis(self):
        return la.transpose(self.iota)


def identity_extension(A):
    return Extension(A, A, la.identity(A.field, A.dim))


class Module:
    """Left module: action[i] = matrix of e_i acting on column vectors."""

    def __init__(self, A, dim, action, validate=True):
        self.A = A
        self.dim = dim
        self.action = [[list(r) for r in m] for m in action]
        if validate:
            self.validate()

    def validate(self):
        f = self.A.field
        if len(self.action) != self.A.dim:
            raise ModuleError("need one action matrix per algebra basis element")
        if self.dim == 0:
            return
        unit_mat = _combine(f, self.action, self.A.unit, self.dim)
        if unit_mat != la.identity(f, self.dim):
            raise ModuleError("unit does not act as identity")
        for i in range(self.A.dim):
            for j in range(self.A.dim):
                lhs = la.mat_mul(f, self.action[i], self.action[j])
                rhs = _combine(f, self.action, self.A.table[i][j], self.dim)
                if lhs != rhs:
                    raise ModuleError("action not multiplicative at (%d,%d)" % (i, j))

    def act(self, avec, m):
        f = self.A.field
        return la.mat_vec(f, _combine(f, self.action, avec, self.dim), m)


def _combine(field, mats, coeffs, dim):
    out = la.zeros(field, dim, dim)
    for c, M in zip(coeffs, mats):
        if c == field.zero:
            continue
        for r in range(dim):
            row = M[r]
            orow = out[r]
            for s in range(dim):
                if row[s] != field.zero:
                    orow[s] = field.add(orow[s], field.mul(c, row[s]))
    return out


def left_regular_module(A):
    return Module(A, A.dim, [A.left_mult_basis(i) for i in range(A.dim)], validate=False)


def right_regular_module(A):
    """The right regular module, presented as a left module over A^op."""
    return Module(
        opposite(A), A.dim, [A.right_mult_basis(i) for i in range(A.dim)], validate=False
    )


def right_module(A, dim, right_action):
    """Right A-module with matrices B_i (m . e_i = B_i m), as a left A^op-module."""
    return Module(opposite(A), dim, right_action)


class Bimodule:
    """(T,R)-bimodule: left[i] per T-basis element, right[j] per R-basis."""

    def __init__(self, T, R, dim, left, right, validate=True):
        check_same_field(T.field, R.field)
        self.T = T
        self.R = R
        self.dim = dim
        self.left = [[list(r) for r in m] for m in left]
        self.right = [[list(r) for r in m] for m in right]
        if validate:
            self.validate()

    @property
    def field(self):
        return self.T.field

    def validate(self):
        f = self.field
        Module(self.T, self.dim, self.left, validate=True)
        Module(opposite(self.R), self.dim, self.right, validate=True)
        for A in self.left:
            for B in self.right:
                if la.mat_mul(f, A, B) != la.mat_mul(f, B, A):
                    raise ModuleError("left and right actions do not commute")

    def left_act(self, tvec):
        return _combine(self.field, self.left, tvec, self.dim)

    def right_act(self, rvec):
        return _combine(self.field, self.right, rvec, self.dim)

    def as_left_T_module(self):
        return Module(self.T, self.dim, self.left, validate=False)

    def as_right_R_module(self):
        return Module(opposite(self.R), self.dim, self.right, validate=False)

    def actions(self):
        """Combined action list (left then right) for equivariance systems."""
        return self.left + self.right

    def twist_left(self, beta):
        """Left action precomposed with an automorphism beta of T (matrix)."""
        cols = la.transpose(beta)
        left = [_combine(self.field, self.left, c, self.dim) for c in cols]
        return Bimodule(self.T, self.R, self.dim, left, self.right, validate=False)


def regular_bimodule(A):
    return Bimodule(
        A,
        A,
        A.dim,
        [A.left_mult_basis(i) for i in range(A.dim)],
        [A.right_mult_basis(j) for j in range(A.dim)],
        validate=False,
    )


def natural_bimodule(ext, pattern):
    """The bimodules S R S / R R S / S R R / R R R / S S S cut out of R by iota."""
    S, R = ext.S, ext.R
    f = R.field
    cols = ext.embedded_basis()
    lS = [R.left_mult(c) for c in cols]
    rS = [R.right_mult(c) for c in cols]
    lR = [R.left_mult_basis(i) for i in range(R.dim)]
    rR = [R.right_mult_basis(j) for j in range(R.dim)]
    if pattern == "R_as_SRS":
        return Bimodule(S, S, R.dim, lS, rS, validate=False)
    if pattern == "R_as_RRS":
        return Bimodule(R, S, R.dim, lR, rS, validate=False)
    if pattern == "R_as_SRR":
        return Bimodule(S, R, R.dim, lS, rR, validate=False)
    if pattern == "R_as_RRR":
        return regular_bimodule(R)
    if pattern == "S_as_SSS":
        return regular_bimodule(S)
    raise ModuleError("unknown pattern %r" % (pattern,))


# ---------------------------------------------------------------------------
# hom spaces


def equivariant_maps(field, dimM, dimN, actsM, actsN):
    """Basis of matrices F (dimN x dimM) with F @ actM_i = actN_i @ F."""
    if dimM == 0 or dimN == 0:
        return []
    nunk = dimM * dimN
    rows = []
    z = field.zero
    for Am, An in zip(actsM, actsN):
        for r in range(dimN):
            for c in range(dimM):
                row = [z] * nunk
                # (F @ Am)[r][c] = sum_b F[r][b] Am[b][c]
                for b in range(dimM):
                    if Am[b][c] != z:
                        row[r * dimM + b] = field.add(row[r * dimM + b], Am[b][c])
                # -(An @ F)[r][c] = -sum_a An[r][a] F[a][c]
                for a in range(dimN):
                    if An[r][a] != z:
                        row[a * dimM + c] = field.sub(row[a * dimM + c], An[r][a])
                if any(x != z for x in row):
                    rows.append(row)
    ker = la.kernel(field, rows, nunk)
    return [la.unflatten(v, dimN, dimM) for v in ker]


def hom_modules(M, N):
    if M.A.dim != N.A.dim or M.A.table != N.A.table:
        raise AlgebraMismatch("modules over different algebras")
    return equivariant_maps(M.A.field, M.dim, N.dim, M.action, N.action)


def hom_bimodules(M, N):
    if (M.T.table, M.R.table) != (N.T.table, N.R.table):
        raise AlgebraMismatch("bimodules over different algebra pairs")
    return equivariant_maps(M.field, M.dim, N.dim, M.actions(), N.actions())


def casimir_subspace(M):
    """Basis of {m : t.m = m.t} for an (S,S)-bimodule."""
    if M.T.dim != M.R.dim or M.T.table != M.R.table:
        raise AlgebraMismatch("casimir needs both actions by the same algebra")
    rows = []
    for A, B in zip(M.left, M.right):
        rows.extend(la.mat_sub(M.field, A, B))
    return la.kernel(M.field, rows, M.dim)


# ---------------------------------------------------------------------------
# tensor product over a middle algebra


class TensorProduct:
    """M (x)_S N for M an (A,S)- and N an (S,B)-bimodule.

    bim        : the (A,B)-bimodule on the quotient space
    factor     : (q x mn) matrix, canonical surjection from M (x)_field N
    section    : (mn x q) matrix picking representatives
    pure(a, b) : quotient coordinates of m_a (x) n_b
    """

    def __init__(self, M, N):
        if M.R.table != N.T.table:
            raise AlgebraMismatch("tensor factors do not share the middle algebra")
        f = M.field
        m, n = M.dim, N.dim
        S = N.T
        mn = m * n
        rels = []
        z = f.zero
        for s in range(S.dim):
            BM = M.right[s]
            LN = N.left[s]
            for a in range(m):
                for b in range(n):
                    row = [z] * mn
                    for k in range(m):
                        if BM[k][a] != z:
                            row[k * n + b] = f.add(row[k * n + b], BM[k][a])
                    for l in range(n):
                        if LN[l][b] != z:
                            row[a * n + l] = f.sub(row[a * n + l], LN[l][b])
                    if any(x != z for x in row):
                        rels.append(row)
        rr = la.span_rref(f, rels) if rels else []
        pivots = [next(j for j, x in enumerate(row) if x != z) for row in rr]
        keep = [c for c in range(mn) if c not in set(pivots)]
        self.field = f
        self.M, self.N = M, N
        self.rel_rref = rr
        self.keep = keep
        self.full_dim = mn
        q = len(keep)

        def project(v):
            red = la.reduce_by_rref(f, rr, v)
            return [red[c] for c in keep]

        self._project = project
        self.factor = [project(la.unit_vec(f, mn, j)) for j in range(mn)]
        self.factor = la.transpose(self.factor) if self.factor else []
        self.section = la.zeros(f, mn, q)
        for col, c in enumerate(keep):
            self.section[c][col] = f.one
        left = []
        for i in range(M.T.dim):
            LM = M.left[i]
            cols = []
            for c in keep:
                a, b = divmod(c, n)
                full = [z] * mn
                for k in range(m):
                    if LM[k][a] != z:
                        full[k * n + b] = LM[k][a]
                cols.append(project(full))
            left.append(la.transpose(cols) if cols else [])
        right = []
        for j in range(N.R.dim):
            BN = N.right[j]
            cols = []
            for c in keep:
                a, b = divmod(c, n)
                full = [z] * mn
                for l in range(n):
                    if BN[l][b] != z:
                        full[a * n + l] = BN[l][b]
                cols.append(project(full))
            right.append(la.transpose(cols) if cols else [])
        self.bim = Bimodule(M.T, N.R, q, left, right, validate=False)

    @property
    def dim(self):
        return self.bim.dim

    def project(self, full_vec):
        return self._project(full_vec)

    def pure(self, a, b):
        f = self.field
        full = [f.zero] * self.full_dim
        full[a * self.N.dim + b] = f.one
        return self._project(full)

    def lift(self, qvec):
        return la.mat_vec(self.field, self.section, qvec) if self.bim.dim else [
            self.field.zero
        ] * self.full_dim


def tensor_over(M, N):
    return TensorProduct(M, N)


# ---------------------------------------------------------------------------
# duals


class DualBimodule:
    """Wrapper holding the dual as an abstract bimodule plus its concrete
    map basis (one matrix per dual basis element) for evaluation."""

    def __init__(self, bim, maps, coord):
        self.bim = bim
        self.maps = maps
        self.coord = coord

    @property
    def dim(self):
        return self.bim.dim

    def as_map(self, coords):
        f = self.bim.field
        if not self.maps:
            return None
        rows = len(self.maps[0])
        cols = len(self.maps[0][0])
        out = la.zeros(f, rows, cols)
        for c, Fm in zip(coords, self.maps):
            if c == f.zero:
                continue
            out = la.mat_add(f, out, la.mat_scale(f, c, Fm))
        return out

    def express(self, matrix):
        return self.coord.express(la.flatten(matrix))


def dual_right(M):
    """M* = Hom(M_B, B_B) for an (A,B)-bimodule M; a (B,A)-bimodule with
    (b f a)(m) = b f(a m)."""
    A, B = M.T, M.R
    f = M.field
    maps = equivariant_maps(
        f, M.dim, B.dim, M.right, [B.right_mult_basis(j) for j in range(B.dim)]
    )
    return _package_dual(
        M,
        maps,
        B,
        A,
        left_of=lambda i, F: la.mat_mul(f, B.left_mult_basis(i), F),
        right_of=lambda j, F: la.mat_mul(f, F, M.left[j]),
    )


def dual_left(M):
    """*M = Hom(_A M, _A A) for an (A,B)-bimodule M; a (B,A)-bimodule with
    (m)(b f a) = ((m b) f) a, maps written on the right."""
    A, B = M.T, M.R
    f = M.field
    maps = equivariant_maps(
        f, M.dim, A.dim, M.left, [A.left_mult_basis(i) for i in range(A.dim)]
    )
    return _package_dual(
        M,
        maps,
        B,
        A,
        left_of=lambda i, F: la.mat_mul(f, F, M.right[i]),
        right_of=lambda j, F: la.mat_mul(f, A.right_mult_basis(j), F),
    )


def _package_dual(M, maps, Tnew, Rnew, left_of, right_of):
    f = M.field
    d = len(maps)
    if d == 0:
        zero_left = [la.zeros(f, 0, 0) for _ in range(Tnew.dim)]
        zero_right = [la.zeros(f, 0, 0) for _ in range(Rnew.dim)]
        bim = Bimodule(Tnew, Rnew, 0, zero_left, zero_right, validate=False)
        return DualBimodule(bim, [], None)
    coord = la.CoordSystem(f, [la.flatten(F) for F in maps])
    left = []
    for i in range(Tnew.dim):
        cols = [coord.express(la.flatten(left_of(i, F))) for F in maps]
        left.append(la.transpose(cols))
    right = []
    for j in range(Rnew.dim):
        cols = [coord.express(la.flatten(right_of(j, F))) for F in maps]
        right.append(la.transpose(cols))
    bim = Bimodule(Tnew, Rnew, d, left, right, validate=False)
    return DualBimodule(bim, maps, coord)


# ---------------------------------------------------------------------------
# add-summand primitive


class AddWitness:
    """Family (f_i, g_i) with sum g_i f_i = id_M."""

    def __init__(self, fs, gs):
        self.fs = fs
        self.gs = gs

    def verify(self, field, dimM):
        total = la.zeros(field, dimM, dimM)
        for Fm, Gm in zip(self.fs, self.gs):
            total = la.mat_add(field, total, la.mat_mul(field, Gm, Fm))
        return total == la.identity(field, dimM)


def in_add_generic(field, dimM, dimN, actsM, actsN):
    """M in add(N) via the trace-ideal criterion.  Returns
    (bool, AddWitness or None, detail)."""
    if dimM == 0:
        return True, AddWitness([], []), "zero module"
    homMN = equivariant_maps(field, dimM, dimN, actsM, actsN)
    homNM = equivariant_maps(field, dimN, dimM, actsN, actsM)
    if not homMN or not homNM:
        return False, None, "empty hom space"
    comps = []
    for Fm in homMN:
        for Gm in homNM:
            comps.append(la.flatten(la.mat_mul(field, Gm, Fm)))
    target = la.flatten(la.identity(field, dimM))
    sol = la.solve(field, la.transpose(comps), target)
    if sol is None:
        return False, None, "identity outside composition span"
    coeffs, _ = sol
    fs, gs = [], []
    idx = 0
    for Fm in homMN:
        acc = None
        for Gm in homNM:
            c = coeffs[idx]
            idx += 1
            if c == field.zero:
                continue
            piece = la.mat_scale(field, c, Gm)
            acc = piece if acc is None else la.mat_add(field, acc, piece)
        if acc is not None:
            fs.append(Fm)
            gs.append(acc)
    wit = AddWitness(fs, gs)
    assert wit.verify(field, dimM)
    return True, wit, None


def in_add_modules(M, N):
    if M.A.table != N.A.table:
        raise AlgebraMismatch("modules over different algebras")
    return in_add_generic(M.A.field, M.dim, N.dim, M.action, N.action)


def in_add_bimodules(M, N):
    if (M.T.table, M.R.table) != (N.T.table, N.R.table):
        raise AlgebraMismatch("bimodules over different algebra pairs")
    return in_add_generic(M.field, M.dim, N.dim, M.actions(), N.actions())


def regular_in_add_of_dual(A):
    """QF ring test: right regular module in add of the linear dual D(A)."""
    reg = right_regular_module(A)
    dual_action = [la.transpose(A.left_mult_basis(i)) for i in range(A.dim)]
    dual = Module(opposite(A), A.dim, dual_action, validate=False)
    ok, _, _ = in_add_modules(reg, dual)
    return ok
