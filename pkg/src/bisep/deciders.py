"""Property deciders for ring extensions and bimodules.

Every True verdict carries a witness that is re-verified by direct
evaluation before being returned; False verdicts carry the kind of
certificate (usually linear infeasibility); Unknown appears only when a
budgeted search runs out of budget.  No decider ever concludes False
from a failed random sample.
"""

from __future__ import annotations

import itertools
import time

from . import linalg as la
from . import modules as mod
from .algebra import opposite
from .fields import ExtField, PrimeField, Rationals

DEFAULT_BUDGET = 10 ** 6

TRUE = "true"
FALSE = "false"
UNKNOWN = "unknown"


class Outcome:
    def __init__(self, verdict, witness=None, reason=None, certificate=None, data=None):
        self.verdict = verdict
        self.witness = witness
        self.reason = reason
        self.certificate = certificate
        self.data = data or {}

    @property
    def is_true(self):
        return self.verdict == TRUE

    @property
    def is_false(self):
        return self.verdict == FALSE

    @property
    def is_unknown(self):
        return self.verdict == UNKNOWN

    def to_json(self, with_witness=True):
        out = {"verdict": self.verdict}
        if with_witness and self.witness is not None:
            out["witness"] = self.witness
        if self.reason is not None:
            out["reason"] = self.reason
        if self.certificate is not None:
            out["certificate_kind"] = self.certificate
        return out

    def __repr__(self):
        return "Outcome(%s)" % self.verdict


def _true(witness=None, **data):
    return Outcome(TRUE, witness=witness, data=data)


def _false(certificate="LinearInfeasible", reason=None):
    return Outcome(FALSE, certificate=certificate, reason=reason)


def _unknown(reason, certificate="Budget"):
    return Outcome(UNKNOWN, reason=reason, certificate=certificate)


def ser_vec(field, v):
    return [field.scalar_to_json(x) for x in v]


def ser_mat(field, A):
    return [ser_vec(field, row) for row in A]


# ---------------------------------------------------------------------------
# invertible elements of a matrix space


def _first_elements(field, count):
    out = []
    for x in field.elements():
        out.append(x)
        if len(out) == count:
            break
    return out


def invertible_combination(field, mats, n, budget=DEFAULT_BUDGET):
    """Search for coefficients c with sum c_i mats[i] invertible (n x n).

    Returns (status, coeffs) with status in {"found", "none", "unknown"}.
    Complete except for the explicitly budget-limited branches.
    """
    if n == 0:
        return "found", []
    d = len(mats)
    if d == 0:
        return "none", None

    def combo(cs):
        out = la.zeros(field, n, n)
        for c, M in zip(cs, mats):
            if c != field.zero:
                out = la.mat_add(field, out, la.mat_scale(field, c, M))
        return out

    if isinstance(field, Rationals):
        # det(sum c_i mats[i]) has total degree <= n; a grid with n+1
        # values per axis hits a nonzero point iff det is not identically 0
        grid = [field.from_int(i) for i in range(n + 1)]
        if (n + 1) ** d > budget:
            return "unknown", None
        for cs in itertools.product(grid, repeat=d):
            if la.is_invertible(field, combo(cs)):
                return "found", list(cs)
        return "none", None

    q = field.size
    if q ** d <= budget:
        for cs in itertools.product(*[list(field.elements())] * d):
            if la.is_invertible(field, combo(cs)):
                return "found", list(cs)
        return "none", None
    if q > n and (n + 1) ** d <= budget:
        grid = _first_elements(field, n + 1)
        for cs in itertools.product(grid, repeat=d):
            if la.is_invertible(field, combo(cs)):
                return "found", list(cs)
        return "none", None
    if isinstance(field, PrimeField):
        # enlarge scalars so the grid lemma applies, then descend
        k = 1
        while field.p ** k <= n:
            k += 1
        big = ExtField(field.p, k)
        lifted = [[[big.from_int(x) for x in row] for row in M] for M in mats]

        def bigcombo(cs):
            out = la.zeros(big, n, n)
            for c, M in zip(cs, lifted):
                if c != big.zero:
                    out = la.mat_add(big, out, la.mat_scale(big, c, M))
            return out

        grid = _first_elements(big, n + 1)
        if (n + 1) ** d > budget:
            return "unknown", None
        hit = None
        for cs in itertools.product(grid, repeat=d):
            if la.is_invertible(big, bigcombo(cs)):
                hit = cs
                break
        if hit is None:
            return "none", None
        # an invertible combination exists over F_p (Noether-Deuring);
        # look for one within the remaining budget
        states = 0
        for cs in itertools.product(*[list(field.elements())] * d):
            states += 1
            if states > budget:
                return "unknown", None
            if la.is_invertible(field, combo(cs)):
                return "found", list(cs)
        return "unknown", None
    return "unknown", None


# ---------------------------------------------------------------------------
# extension deciders


def _casimir_mu_solve(field, TP, mu_cols, target):
    """Find e in the Casimir subspace of TP.bim with Mu(e) = target."""
    cas = mod.casimir_subspace(TP.bim) if TP.dim else []
    if not cas:
        if la.is_zero_vec(field, target):
            return [field.zero] * TP.dim, cas
        return None, cas
    Mu = la.transpose(mu_cols)
    C = la.transpose(cas)
    MC = la.mat_mul(field, Mu, C)
    sol = la.solve(field, MC, target)
    if sol is None:
        return None, cas
    coeffs, _ = sol
    return la.mat_vec(field, C, coeffs), cas


def is_separable_ext(ext, budget=DEFAULT_BUDGET):
    """Casimir element e in R (x)_S R with mu(e) = 1 and re = er."""
    R = ext.R
    f = R.field
    RRS = mod.natural_bimodule(ext, "R_as_RRS")
    SRR = mod.natural_bimodule(ext, "R_as_SRR")
    TP = mod.tensor_over(RRS, SRR)
    mu_cols = []
    for c in TP.keep:
        a, b = divmod(c, R.dim)
        mu_cols.append(R.table[a][b])
    e, _ = _casimir_mu_solve(f, TP, mu_cols, R.unit)
    if e is None:
        return _false()
    assert _verify_casimir(f, TP, mu_cols, e, R.unit)
    return _true(
        witness={"element": ser_vec(f, e), "space": "R tensor_S R (quotient basis)"},
        element=e,
        tensor=TP,
    )


def _verify_casimir(field, TP, mu_cols, e, target):
    Mu = la.transpose(mu_cols)
    if la.mat_vec(field, Mu, e) != [field.add(x, field.zero) for x in target]:
        return False
    for A, B in zip(TP.bim.left, TP.bim.right):
        diff = la.mat_vec(field, la.mat_sub(field, A, B), e)
        if not la.is_zero_vec(field, diff):
            return False
    return True


def _split_space(ext):
    """Hom_{S-S}(R, S) basis and the affine constraint E o iota = id."""
    SRS = mod.natural_bimodule(ext, "R_as_SRS")
    SSS = mod.natural_bimodule(ext, "S_as_SSS")
    return mod.hom_bimodules(SRS, SSS)


def _split_solutions(ext):
    """Particular solution + homogeneous basis for split projections."""
    f = ext.R.field
    basis = _split_space(ext)
    if not basis:
        return None
    target = la.flatten(la.identity(f, ext.S.dim))
    cols = [la.flatten(la.mat_mul(f, H, ext.iota)) for H in basis]
    sol = la.solve(f, la.transpose(cols), target)
    if sol is None:
        return None
    part, ker = sol
    return basis, part, ker


def is_split_ext(ext, budget=DEFAULT_BUDGET):
    if not ext.proper:
        return _false(certificate="NotProper", reason="iota is not injective")
    f = ext.R.field
    sols = _split_solutions(ext)
    if sols is None:
        return _false()
    basis, part, _ = sols
    E = _mat_combo(f, basis, part, ext.S.dim, ext.R.dim)
    assert la.mat_mul(f, E, ext.iota) == la.identity(f, ext.S.dim)
    assert _is_ss_bimodule_map(ext, E)
    return _true(witness={"projection": ser_mat(f, E)}, projection=E)


def _mat_combo(field, mats, coeffs, rows, cols):
    out = la.zeros(field, rows, cols)
    for c, M in zip(coeffs, mats):
        if c != field.zero:
            out = la.mat_add(field, out, la.mat_scale(field, c, M))
    return out


def _is_ss_bimodule_map(ext, E):
    f = ext.R.field
    cols = ext.embedded_basis()
    for i, c in enumerate(cols):
        if la.mat_mul(f, E, ext.R.left_mult(c)) != la.mat_mul(
            f, ext.S.left_mult_basis(i), E
        ):
            return False
        if la.mat_mul(f, E, ext.R.right_mult(c)) != la.mat_mul(
            f, ext.S.right_mult_basis(i), E
        ):
            return False
    return True


def count_split_projections(ext, budget=DEFAULT_BUDGET):
    """Exact count over a finite field; 1 or "infinite" over Q."""
    if not ext.proper:
        return 0
    f = ext.R.field
    sols = _split_solutions(ext)
    if sols is None:
        return 0
    _, _, ker = sols
    d = len(ker)
    if isinstance(f, Rationals):
        return 1 if d == 0 else "infinite"
    return f.size ** d


def is_fgp(ext, side, budget=DEFAULT_BUDGET):
    """R f.g. projective as a one-sided S-module, with dual bases."""
    R, S = ext.R, ext.S
    f = R.field
    cols = ext.embedded_basis()
    if side == "right":
        M = mod.Module(opposite(S), R.dim, [R.right_mult(c) for c in cols], validate=False)
        N = mod.right_regular_module(S)
    elif side == "left":
        M = mod.Module(S, R.dim, [R.left_mult(c) for c in cols], validate=False)
        N = mod.left_regular_module(S)
    else:
        raise ValueError("side must be 'left' or 'right'")
    ok, wit, _ = mod.in_add_modules(M, N)
    if not ok:
        return _false()
    xs = [la.mat_vec(f, G, S.unit) for G in wit.gs]
    for r in range(R.dim):
        er = la.unit_vec(f, R.dim, r)
        acc = la.zero_vec(f, R.dim)
        for x, F in zip(xs, wit.fs):
            fr = ext.embed(la.mat_vec(f, F, er))
            term = R.mul_vec(x, fr) if side == "right" else R.mul_vec(fr, x)
            acc = la.vec_add(f, acc, term)
        assert acc == er
    return _true(
        witness={
            "xs": [ser_vec(f, x) for x in xs],
            "fs": [ser_mat(f, F) for F in wit.fs],
            "side": side,
        },
        xs=xs,
        fs=wit.fs,
        gs=wit.gs,
    )


def _frobenius_hom_space(ext):
    """(M*, basis of Hom_{S-R}(R, R*)) with R* = Hom(R_S, S_S)."""
    RRS = mod.natural_bimodule(ext, "R_as_RRS")
    SRR = mod.natural_bimodule(ext, "R_as_SRR")
    Mstar = mod.dual_right(RRS)
    return Mstar, mod.hom_bimodules(SRR, Mstar.bim)


def is_frobenius_ext(ext, budget=DEFAULT_BUDGET):
    R, S = ext.R, ext.S
    f = R.field
    fgp = is_fgp(ext, "right", budget)
    if not fgp.is_true:
        return _false(reason="R not f.g. projective as right S-module")
    Mstar, homs = _frobenius_hom_space(ext)
    if Mstar.dim != R.dim:
        return _false(reason="dim R* = %d != dim R" % Mstar.dim)
    status, coeffs = invertible_combination(f, homs, R.dim, budget)
    if status == "none":
        return _false(certificate="NoInvertibleElement")
    if status == "unknown":
        return _unknown("invertibility search budget exceeded")
    phi = _mat_combo(f, homs, coeffs, R.dim, R.dim)
    phi_inv = la.mat_inverse(f, phi)
    E = Mstar.as_map(la.mat_vec(f, phi, R.unit))
    xs = fgp.data["xs"]
    ys = [la.mat_vec(f, phi_inv, Mstar.express(F)) for F in fgp.data["fs"]]
    _verify_frobenius_system(ext, E, xs, ys)
    return _true(
        witness={
            "E": ser_mat(f, E),
            "xs": [ser_vec(f, x) for x in xs],
            "ys": [ser_vec(f, y) for y in ys],
        },
        E=E,
        xs=xs,
        ys=ys,
    )


def _verify_frobenius_system(ext, E, xs, ys):
    """Both dual-basis equations, checked on every basis element of R."""
    R = ext.R
    f = R.field
    for r in range(R.dim):
        er = la.unit_vec(f, R.dim, r)
        lhs1 = la.zero_vec(f, R.dim)
        lhs2 = la.zero_vec(f, R.dim)
        for x, y in zip(xs, ys):
            e1 = ext.embed(la.mat_vec(f, E, R.mul_vec(er, x)))
            lhs1 = la.vec_add(f, lhs1, R.mul_vec(e1, y))
            e2 = ext.embed(la.mat_vec(f, E, R.mul_vec(y, er)))
            lhs2 = la.vec_add(f, lhs2, R.mul_vec(x, e2))
        if lhs1 != er or lhs2 != er:
            raise AssertionError("Frobenius dual-basis equations failed to verify")


def count_frobenius_homs(ext, budget=DEFAULT_BUDGET):
    """Number of Frobenius homomorphisms (finite fields only)."""
    f = ext.R.field
    if isinstance(f, Rationals):
        return None
    if not is_fgp(ext, "right", budget).is_true:
        return 0
    Mstar, homs = _frobenius_hom_space(ext)
    if Mstar.dim != ext.R.dim:
        return 0
    d = len(homs)
    if d == 0:
        return 0
    if f.size ** d > budget:
        return None
    count = 0
    for cs in itertools.product(*[list(f.elements())] * d):
        phi = _mat_combo(f, homs, cs, ext.R.dim, ext.R.dim)
        if la.is_invertible(f, phi):
            count += 1
    return count


def is_qf_ext(ext, side, budget=DEFAULT_BUDGET):
    """fgp both sides + the dual a summand of copies of R (one side)."""
    for s in ("left", "right"):
        if not is_fgp(ext, s, budget).is_true:
            return _false(reason="R not f.g. projective as %s S-module" % s)
    RRS = mod.natural_bimodule(ext, "R_as_RRS")
    SRR = mod.natural_bimodule(ext, "R_as_SRR")
    if side == "right":
        dual = mod.dual_right(RRS)
        ok, wit, _ = mod.in_add_bimodules(dual.bim, SRR)
    elif side == "left":
        dual = mod.dual_left(SRR)
        ok, wit, _ = mod.in_add_bimodules(dual.bim, RRS)
    else:
        raise ValueError("side must be 'left' or 'right'")
    if not ok:
        return _false()
    return _true(witness={"summands": len(wit.fs), "side": side})


def is_h_separable(ext, budget=DEFAULT_BUDGET):
    """R (x)_S R in add(R) as R-R-bimodules."""
    RRS = mod.natural_bimodule(ext, "R_as_RRS")
    SRR = mod.natural_bimodule(ext, "R_as_SRR")
    TP = mod.tensor_over(RRS, SRR)
    ok, wit, _ = mod.in_add_bimodules(TP.bim, mod.regular_bimodule(ext.R))
    if not ok:
        return _false()
    return _true(witness={"summands": len(wit.fs)})


def is_centrally_projective(ext, budget=DEFAULT_BUDGET):
    """R in add(S) as S-S-bimodules."""
    SRS = mod.natural_bimodule(ext, "R_as_SRS")
    ok, wit, _ = mod.in_add_bimodules(SRS, mod.regular_bimodule(ext.S))
    if not ok:
        return _false()
    return _true(witness={"summands": len(wit.fs)})


def is_biseparable_ext(ext, budget=DEFAULT_BUDGET):
    parts = {
        "split": is_split_ext(ext, budget),
        "separable": is_separable_ext(ext, budget),
        "fgp_left": is_fgp(ext, "left", budget),
        "fgp_right": is_fgp(ext, "right", budget),
    }
    if any(p.is_unknown for p in parts.values()):
        return _unknown("component decision unknown")
    if all(p.is_true for p in parts.values()):
        return _true(
            witness={k: p.to_json() for k, p in parts.items()}, components=parts
        )
    failed = sorted(k for k, p in parts.items() if p.is_false)
    return _false(reason="failed: %s" % ", ".join(failed))


def axiom_compatibility_search(ext, budget=DEFAULT_BUDGET, max_iter=64):
    """A split projection E and Casimir element e with
    sum E(x_i) y_i = 1 = sum x_i E(y_i)."""
    R = ext.R
    f = R.field
    split = is_split_ext(ext, budget)
    sep = is_separable_ext(ext, budget)
    if not (split.is_true and sep.is_true):
        return _false(reason="extension is not both split and separable")
    sols = _split_solutions(ext)
    basis, part, ker = sols
    TP = sep.data["tensor"]

    def solve_e_given_E(E):
        # e need only be Casimir (central); both compatibility sums = 1
        cas = mod.casimir_subspace(TP.bim)
        if not cas:
            return None
        cols1, cols2 = [], []
        for c in TP.keep:
            a, b = divmod(c, R.dim)
            ea = la.unit_vec(f, R.dim, a)
            eb = la.unit_vec(f, R.dim, b)
            cols1.append(R.mul_vec(ext.embed(la.mat_vec(f, E, ea)), eb))
            cols2.append(R.mul_vec(ea, ext.embed(la.mat_vec(f, E, eb))))
        C = la.transpose(cas)
        big = []
        for Mx in (la.transpose(cols1), la.transpose(cols2)):
            big.extend(la.mat_mul(f, Mx, C))
        target = list(R.unit) * 2
        sol = la.solve(f, big, target)
        if sol is None:
            return None
        return la.mat_vec(f, C, sol[0])

    def verify(E, e):
        ok1 = la.zero_vec(f, R.dim)
        ok2 = la.zero_vec(f, R.dim)
        for c, coef in zip(TP.keep, e):
            if coef == f.zero:
                continue
            a, b = divmod(c, R.dim)
            ea = la.unit_vec(f, R.dim, a)
            eb = la.unit_vec(f, R.dim, b)
            t1 = R.mul_vec(ext.embed(la.mat_vec(f, E, ea)), eb)
            t2 = R.mul_vec(ea, ext.embed(la.mat_vec(f, E, eb)))
            ok1 = la.vec_add(f, ok1, la.vec_scale(f, coef, t1))
            ok2 = la.vec_add(f, ok2, la.vec_scale(f, coef, t2))
        return ok1 == list(R.unit) and ok2 == list(R.unit)

    def package(E, e):
        assert verify(E, e)
        return _true(
            witness={"E": ser_mat(f, E), "element": ser_vec(f, e)}, E=E, element=e
        )

    d = len(ker)
    if not isinstance(f, Rationals) and f.size ** d <= budget:
        # exhaustive over the affine space of split projections: authoritative
        for cs in itertools.product(*[list(f.elements())] * d) if d else [()]:
            coeffs = list(part)
            for c, kv in zip(cs, ker):
                coeffs = la.vec_add(f, coeffs, la.vec_scale(f, c, kv))
            E = _mat_combo(f, basis, coeffs, ext.S.dim, R.dim)
            e = solve_e_given_E(E)
            if e is not None:
                return package(E, e)
        return _false(reason="no compatible (E, e) pair exists (exhaustive)")
    # over Q (or over budget): complete only for a 0-dimensional E-space;
    # otherwise a deterministic E-grid, then alternation, then Unknown
    if d == 0:
        E = _mat_combo(f, basis, part, ext.S.dim, R.dim)
        e = solve_e_given_E(E)
        if e is not None:
            return package(E, e)
        return _false(reason="unique split projection admits no compatible e")
    grid = (
        [f.from_int(i) for i in range(R.dim + 1)]
        if isinstance(f, Rationals)
        else _first_elements(f, min(f.size, R.dim + 1))
    )
    if len(grid) ** d <= budget:
        for cs in itertools.product(grid, repeat=d):
            coeffs = list(part)
            for c, kv in zip(cs, ker):
                coeffs = la.vec_add(f, coeffs, la.vec_scale(f, c, kv))
            E = _mat_combo(f, basis, coeffs, ext.S.dim, R.dim)
            e = solve_e_given_E(E)
            if e is not None:
                return package(E, e)

    def solve_E_given_e(e):
        cols = []
        for H in basis:
            v1 = la.zero_vec(f, R.dim)
            v2 = la.zero_vec(f, R.dim)
            for c, coef in zip(TP.keep, e):
                if coef == f.zero:
                    continue
                a, b = divmod(c, R.dim)
                ea = la.unit_vec(f, R.dim, a)
                eb = la.unit_vec(f, R.dim, b)
                v1 = la.vec_add(
                    f, v1,
                    la.vec_scale(f, coef, R.mul_vec(ext.embed(la.mat_vec(f, H, ea)), eb)),
                )
                v2 = la.vec_add(
                    f, v2,
                    la.vec_scale(f, coef, R.mul_vec(ea, ext.embed(la.mat_vec(f, H, eb)))),
                )
            cols.append(v1 + v2 + la.flatten(la.mat_mul(f, H, ext.iota)))
        target = list(R.unit) * 2 + la.flatten(la.identity(f, ext.S.dim))
        sol = la.solve(f, la.transpose(cols), target)
        if sol is None:
            return None
        return _mat_combo(f, basis, sol[0], ext.S.dim, R.dim)

    e = sep.data["element"]
    for _ in range(max_iter):
        E = solve_E_given_e(e)
        if E is None:
            return _unknown("alternating search stuck; compatibility undecided")
        e_new = solve_e_given_E(E)
        if e_new is not None:
            return package(E, e_new)
        if verify(E, e):
            return package(E, e)
        return _unknown("alternating search stuck; compatibility undecided")
    return _unknown("alternating search did not converge in %d rounds" % max_iter)


# ---------------------------------------------------------------------------
# bimodule deciders


def _mu_tensor(M):
    """(TP, mu_cols) for M (x)_R *M with mu(m (x) f) = (m)f in T."""
    f = M.field
    SM = mod.dual_left(M)
    TP = mod.tensor_over(M, SM.bim)
    mu_cols = []
    for c in TP.keep:
        a, b = divmod(c, SM.dim)
        Fb = SM.maps[b]
        mu_cols.append([Fb[r][a] for r in range(M.T.dim)])
    return SM, TP, mu_cols


def is_separable_bimodule(M, budget=DEFAULT_BUDGET):
    """e in (M (x)_R *M)^T with mu_M(e) = 1_T."""
    f = M.field
    T = M.T
    SM, TP, mu_cols = _mu_tensor(M)
    if TP.dim == 0:
        return _false(reason="M tensor *M is zero")
    e, _ = _casimir_mu_solve(f, TP, mu_cols, T.unit)
    if e is None:
        return _false()
    assert _verify_casimir(f, TP, mu_cols, e, T.unit)
    return _true(witness={"element": ser_vec(f, e)}, element=e, tensor=TP, dual=SM)


def bimodule_fgp(M, side):
    """(ok, witness) for M fgp as one-sided module."""
    if side == "left":
        A = mod.Module(M.T, M.dim, M.left, validate=False)
        return mod.in_add_modules(A, mod.left_regular_module(M.T))
    A = mod.Module(opposite(M.R), M.dim, M.right, validate=False)
    return mod.in_add_modules(A, mod.right_regular_module(M.R))


def is_frobenius_bimodule(M, budget=DEFAULT_BUDGET):
    """Two-sided fgp and *M isomorphic to M* as (R,T)-bimodules."""
    f = M.field
    for side in ("left", "right"):
        ok, _, _ = bimodule_fgp(M, side)
        if not ok:
            return _false(reason="M not f.g. projective as %s module" % side)
    SM = mod.dual_left(M)
    Mst = mod.dual_right(M)
    if SM.dim != Mst.dim:
        return _false(reason="dim *M = %d != dim M* = %d" % (SM.dim, Mst.dim))
    homs = mod.hom_bimodules(Mst.bim, SM.bim)
    status, coeffs = invertible_combination(f, homs, SM.dim, budget)
    if status == "none":
        return _false(certificate="NoInvertibleElement")
    if status == "unknown":
        return _unknown("invertibility search budget exceeded")
    phi = _mat_combo(f, homs, coeffs, SM.dim, Mst.dim)
    return _true(
        witness={"phi": ser_mat(f, phi)}, phi=phi, SM=SM, Mst=Mst, homs=homs
    )


def _left_dual_basis(M):
    """Dual basis (n_j, g_j) of M as a left T-module, or None."""
    f = M.field
    ok, wit, _ = bimodule_fgp(M, "left")
    if not ok:
        return None
    ns = [la.mat_vec(f, G, M.T.unit) for G in wit.gs]
    return ns, wit.fs


def _right_dual_basis(M):
    """Dual basis (p_k, h_k) of M as a right R-module, or None."""
    f = M.field
    ok, wit, _ = bimodule_fgp(M, "right")
    if not ok:
        return None
    ps = [la.mat_vec(f, G, M.R.unit) for G in wit.gs]
    return ps, wit.fs


def sep_criterion_5_7(M, budget=DEFAULT_BUDGET):
    """phi-bar in V_2 with sum_j phi-bar(g_j)(n_j) = 1_R (needs _T M fgp)."""
    f = M.field
    db = _left_dual_basis(M)
    if db is None:
        return _false(reason="_T M not f.g. projective (precondition)")
    ns, gs = db
    SM = mod.dual_left(M)
    Mst = mod.dual_right(M)
    homs = mod.hom_bimodules(SM.bim, Mst.bim)
    cols = []
    for Psi in homs:
        v = la.zero_vec(f, M.R.dim)
        for n, g in zip(ns, gs):
            img = Mst.as_map(la.mat_vec(f, Psi, SM.express(g)))
            if img is not None:
                v = la.vec_add(f, v, la.mat_vec(f, img, n))
        cols.append(v)
    sol = la.solve(f, la.transpose(cols), list(M.R.unit)) if cols else None
    if sol is None:
        return _false()
    return _true(witness={"phi_bar_coords": ser_vec(f, sol[0])})


def _criterion_W2_pairing(M):
    """Core of Cor 5.8 / 5.11: phi in W_2 with sum_k (p_k)phi(h_k) = 1_T."""
    f = M.field
    db = _right_dual_basis(M)
    if db is None:
        return _false(reason="M_R not f.g. projective (precondition)")
    ps, hs = db
    SM = mod.dual_left(M)
    Mst = mod.dual_right(M)
    homs = mod.hom_bimodules(Mst.bim, SM.bim)
    cols = []
    for Phi in homs:
        v = la.zero_vec(f, M.T.dim)
        for p, h in zip(ps, hs):
            img = SM.as_map(la.mat_vec(f, Phi, Mst.express(h)))
            if img is not None:
                v = la.vec_add(f, v, la.mat_vec(f, img, p))
        cols.append(v)
    sol = la.solve(f, la.transpose(cols), list(M.T.unit)) if cols else None
    if sol is None:
        return _false()
    return _true(witness={"phi_coords": ser_vec(f, sol[0])})


def sep_criterion_5_8(M, budget=DEFAULT_BUDGET):
    return _criterion_W2_pairing(M)


def sep_criterion_5_11(M, budget=DEFAULT_BUDGET):
    # Cor 5.11's criterion coincides with Cor 5.8's third condition
    return _criterion_W2_pairing(M)


def sep_criterion_5_12(M, budget=DEFAULT_BUDGET):
    """e in {e in M* (x)_T M : re = er} with sum_i k_i(m_i) = 1_R."""
    f = M.field
    Mst = mod.dual_right(M)
    TP = mod.tensor_over(Mst.bim, M)
    if TP.dim == 0:
        return _false(reason="M* tensor M is zero")
    mu_cols = []
    for c in TP.keep:
        a, b = divmod(c, M.dim)
        mu_cols.append([Mst.maps[a][r][b] for r in range(M.R.dim)])
    e, _ = _casimir_mu_solve(f, TP, mu_cols, M.R.unit)
    if e is None:
        return _false()
    assert _verify_casimir(f, TP, mu_cols, e, M.R.unit)
    return _true(witness={"element": ser_vec(f, e)}, element=e)


def _endo_bimodule(M):
    """End(_T M) as an (R,R)-bimodule: (r phi r')(m) = phi(m r) r'."""
    f = M.field
    endos = mod.equivariant_maps(f, M.dim, M.dim, M.left, M.left)
    if not endos:
        raise mod.ModuleError("End(_T M) is zero")
    coord = la.CoordSystem(f, [la.flatten(P) for P in endos])
    R = M.R
    left, right = [], []
    for i in range(R.dim):
        Bi = M.right[i]
        lcols = [coord.express(la.flatten(la.mat_mul(f, P, Bi))) for P in endos]
        rcols = [coord.express(la.flatten(la.mat_mul(f, Bi, P))) for P in endos]
        left.append(la.transpose(lcols))
        right.append(la.transpose(rcols))
    bim = mod.Bimodule(R, R, len(endos), left, right, validate=False)
    return bim, endos, coord


def _fm_endo(M, fmat, m):
    """The endomorphism f . m : m' -> ((m')f) m of _T M."""
    f = M.field
    cols = []
    for c in range(M.dim):
        t = la.mat_vec(f, fmat, la.unit_vec(f, M.dim, c))
        cols.append(la.mat_vec(f, M.left_act(t), m))
    return la.transpose(cols)


def frobenius_pair_data(M, budget=DEFAULT_BUDGET):
    """(e in W_1, nu-bar in V_1) satisfying equations 5.9.1 and 5.9.2."""
    f = M.field
    db = _left_dual_basis(M)
    if db is None:
        return _false(reason="_T M not f.g. projective (precondition)")
    ns, gs = db
    SM = mod.dual_left(M)
    TP = mod.tensor_over(M, SM.bim)
    cas = mod.casimir_subspace(TP.bim) if TP.dim else []
    Ebim, endos, ecoord = _endo_bimodule(M)
    V1 = mod.hom_bimodules(Ebim, mod.regular_bimodule(M.R))

    def lift_pairs(e):
        full = TP.lift(e)
        return [
            (divmod(c, SM.dim), full[c])
            for c in range(len(full))
            if full[c] != f.zero
        ]

    def nu_of(nu_mat, endo):
        return la.mat_vec(f, nu_mat, ecoord.express(la.flatten(endo)))

    def verify(e, nu_mat):
        pairs = lift_pairs(e)
        # 5.9.1: m = sum_i m_i nu(f_i . m) for every basis m
        for mi in range(M.dim):
            em = la.unit_vec(f, M.dim, mi)
            acc = la.zero_vec(f, M.dim)
            for (a, b), coef in pairs:
                r = nu_of(nu_mat, _fm_endo(M, SM.maps[b], em))
                term = la.mat_vec(f, M.right_act(r), la.unit_vec(f, M.dim, a))
                acc = la.vec_add(f, acc, la.vec_scale(f, coef, term))
            if acc != em:
                return False
        # 5.9.2: f = sum_i nu(f . m_i) f_i for every basis f of *M
        for fi in range(SM.dim):
            acc = la.zero_vec(f, SM.dim)
            for (a, b), coef in pairs:
                r = nu_of(nu_mat, _fm_endo(M, SM.maps[fi], la.unit_vec(f, M.dim, a)))
                term = la.mat_vec(f, SM.bim.left_act(r), la.unit_vec(f, SM.dim, b))
                acc = la.vec_add(f, acc, la.vec_scale(f, coef, term))
            if acc != la.unit_vec(f, SM.dim, fi):
                return False
        return True

    def package(e, nu_mat):
        assert verify(e, nu_mat)
        return _true(
            witness={"e": ser_vec(f, e), "nu_bar": ser_mat(f, nu_mat)},
            e=e,
            nu=nu_mat,
            tensor=TP,
            dual=SM,
        )

    w, v = len(cas), len(V1)
    if not isinstance(f, Rationals) and w and v and f.size ** min(w, v) <= budget:
        # exhaustive over the smaller side; authoritative either way
        if v <= w:
            for cs in itertools.product(*[list(f.elements())] * v):
                nu_mat = _mat_combo(f, V1, cs, M.R.dim, len(endos))
                e = _solve_e_given_nu(M, f, TP, cas, SM, nu_mat, ecoord)
                if e is not None and verify(e, nu_mat):
                    return package(e, nu_mat)
        else:
            C = la.transpose(cas)
            for cs in itertools.product(*[list(f.elements())] * w):
                e = la.mat_vec(f, C, list(cs))
                nu_mat = _solve_nu_given_e(M, f, TP, SM, V1, e, ecoord, endos)
                if nu_mat is not None and verify(e, nu_mat):
                    return package(e, nu_mat)
        return _false(reason="no (e, nu-bar) pair exists (exhaustive)")
    # constructive route through the bimodule isomorphism (Prop 5.9)
    frob = is_frobenius_bimodule(M, budget)
    if frob.is_false:
        return _false(reason="M is not a Frobenius bimodule")
    if frob.is_unknown:
        return _unknown("underlying Frobenius decision unknown")
    phi = frob.data["phi"]  # M* -> *M in coordinates
    Mst = frob.data["Mst"]
    phi_bar = la.mat_inverse(f, phi)  # *M -> M*
    # nu-bar = alpha_1^{-1}(phi-bar): nu(psi) = sum_j phi-bar(g_j)((n_j)psi)
    nu_cols = []
    for P in endos:
        val = la.zero_vec(f, M.R.dim)
        for n, g in zip(ns, gs):
            img = Mst.as_map(la.mat_vec(f, phi_bar, SM.express(g)))
            val = la.vec_add(f, val, la.mat_vec(f, img, la.mat_vec(f, P, n)))
        nu_cols.append(val)
    nu_mat = la.transpose(nu_cols)
    # e = beta_1^{-1}(phi): solve beta_1(e) = phi over the Casimir space
    if not cas:
        return _false(reason="W_1 is zero")
    C = la.transpose(cas)
    cols = []
    for kvec in cas:
        pairs = [
            (divmod(c, SM.dim), x)
            for c, x in enumerate(TP.lift(kvec))
            if x != f.zero
        ]
        img = la.zeros(f, SM.dim, Mst.dim)
        for (a, b), coef in pairs:
            for dcol in range(Mst.dim):
                r = la.mat_vec(f, Mst.maps[dcol], la.unit_vec(f, M.dim, a))
                term = la.mat_vec(
                    f, SM.bim.left_act(r), la.unit_vec(f, SM.dim, b)
                )
                for row in range(SM.dim):
                    img[row][dcol] = f.add(
                        img[row][dcol], f.mul(coef, term[row])
                    )
        cols.append(la.flatten(img))
    sol = la.solve(f, la.transpose(cols), la.flatten(phi))
    if sol is None:
        return _false(reason="beta_1(e) = phi has no solution in W_1")
    e = la.mat_vec(f, C, sol[0])
    return package(e, nu_mat)


def _solve_e_given_nu(M, f, TP, cas, SM, nu_mat, ecoord):
    """Equations 5.9.1-2 are linear in e once nu-bar is fixed."""
    rows, rhs = [], []
    C = la.transpose(cas)
    # column c of the full tensor space contributes via its (a, b) pieces
    for mi in range(M.dim):
        em = la.unit_vec(f, M.dim, mi)
        block = []
        for kvec in cas:
            acc = la.zero_vec(f, M.dim)
            for c, coef in enumerate(TP.lift(kvec)):
                if coef == f.zero:
                    continue
                a, b = divmod(c, SM.dim)
                r = la.mat_vec(
                    f, nu_mat, ecoord.express(la.flatten(_fm_endo(M, SM.maps[b], em)))
                )
                term = la.mat_vec(f, M.right_act(r), la.unit_vec(f, M.dim, a))
                acc = la.vec_add(f, acc, la.vec_scale(f, coef, term))
            block.append(acc)
        for row_i in range(M.dim):
            rows.append([col[row_i] for col in block])
            rhs.append(em[row_i])
    for fi in range(SM.dim):
        block = []
        for kvec in cas:
            acc = la.zero_vec(f, SM.dim)
            for c, coef in enumerate(TP.lift(kvec)):
                if coef == f.zero:
                    continue
                a, b = divmod(c, SM.dim)
                r = la.mat_vec(
                    f,
                    nu_mat,
                    ecoord.express(
                        la.flatten(_fm_endo(M, SM.maps[fi], la.unit_vec(f, M.dim, a)))
                    ),
                )
                term = la.mat_vec(f, SM.bim.left_act(r), la.unit_vec(f, SM.dim, b))
                acc = la.vec_add(f, acc, la.vec_scale(f, coef, term))
            block.append(acc)
        target = la.unit_vec(f, SM.dim, fi)
        for row_i in range(SM.dim):
            rows.append([col[row_i] for col in block])
            rhs.append(target[row_i])
    sol = la.solve(f, rows, rhs)
    if sol is None:
        return None
    return la.mat_vec(f, C, sol[0])


def _solve_nu_given_e(M, f, TP, SM, V1, e, ecoord, endos):
    """Equations 5.9.1-2 are linear in nu-bar once e is fixed."""
    pairs = [
        (divmod(c, SM.dim), x) for c, x in enumerate(TP.lift(e)) if x != f.zero
    ]
    rows, rhs = [], []
    for mi in range(M.dim):
        em = la.unit_vec(f, M.dim, mi)
        block = []
        for nu_basis in V1:
            acc = la.zero_vec(f, M.dim)
            for (a, b), coef in pairs:
                r = la.mat_vec(
                    f, nu_basis, ecoord.express(la.flatten(_fm_endo(M, SM.maps[b], em)))
                )
                term = la.mat_vec(f, M.right_act(r), la.unit_vec(f, M.dim, a))
                acc = la.vec_add(f, acc, la.vec_scale(f, coef, term))
            block.append(acc)
        for row_i in range(M.dim):
            rows.append([col[row_i] for col in block])
            rhs.append(em[row_i])
    for fi in range(SM.dim):
        block = []
        for nu_basis in V1:
            acc = la.zero_vec(f, SM.dim)
            for (a, b), coef in pairs:
                r = la.mat_vec(
                    f,
                    nu_basis,
                    ecoord.express(
                        la.flatten(_fm_endo(M, SM.maps[fi], la.unit_vec(f, M.dim, a)))
                    ),
                )
                term = la.mat_vec(f, SM.bim.left_act(r), la.unit_vec(f, SM.dim, b))
                acc = la.vec_add(f, acc, la.vec_scale(f, coef, term))
            block.append(acc)
        target = la.unit_vec(f, SM.dim, fi)
        for row_i in range(SM.dim):
            rows.append([col[row_i] for col in block])
            rhs.append(target[row_i])
    sol = la.solve(f, rows, rhs)
    if sol is None:
        return None
    nu_mat = la.zeros(f, M.R.dim, len(endos))
    for c, nb in zip(sol[0], V1):
        if c != f.zero:
            nu_mat = la.mat_add(f, nu_mat, la.mat_scale(f, c, nb))
    return nu_mat


def sep_criterion_5_15(M, frob, budget=DEFAULT_BUDGET):
    """(T,R)-linear alpha-bar: M -> M with sum_i (alpha-bar(m_i)) f_i = 1_T,
    given a Frobenius pair witness from frobenius_pair_data."""
    if not frob.is_true:
        raise ValueError("sep_criterion_5_15 needs a Frobenius pair witness")
    f = M.field
    TP = frob.data["tensor"]
    SM = frob.data["dual"]
    pairs = [
        (divmod(c, SM.dim), x)
        for c, x in enumerate(TP.lift(frob.data["e"]))
        if x != f.zero
    ]
    homs = mod.hom_bimodules(M, M)
    cols = []
    for A in homs:
        v = la.zero_vec(f, M.T.dim)
        for (a, b), coef in pairs:
            val = la.mat_vec(
                f, SM.maps[b], la.mat_vec(f, A, la.unit_vec(f, M.dim, a))
            )
            v = la.vec_add(f, v, la.vec_scale(f, coef, val))
        cols.append(v)
    sol = la.solve(f, la.transpose(cols), list(M.T.unit)) if cols else None
    if sol is None:
        return _false()
    alpha = la.zeros(f, M.dim, M.dim)
    for c, A in zip(sol[0], homs):
        if c != f.zero:
            alpha = la.mat_add(f, alpha, la.mat_scale(f, c, A))
    return _true(witness={"alpha_bar": ser_mat(f, alpha)}, alpha=alpha)


# ---------------------------------------------------------------------------
# twisted Frobenius and automorphisms


class NotAutomorphism(Exception):
    pass


def _check_automorphism(S, beta):
    f = S.field
    if not la.is_invertible(f, beta):
        return False
    if la.mat_vec(f, beta, S.unit) != [f.add(x, f.zero) for x in S.unit]:
        return False
    cols = la.transpose(beta)
    for i in range(S.dim):
        for j in range(S.dim):
            if la.mat_vec(f, beta, S.table[i][j]) != S.mul_vec(cols[i], cols[j]):
                return False
    return True


def algebra_automorphisms(S, budget=DEFAULT_BUDGET):
    """All algebra automorphisms of a small finite algebra, by exhaustion."""
    f = S.field
    if isinstance(f, Rationals):
        raise ValueError("automorphism enumeration needs a finite field")
    n = S.dim
    if f.size ** (n * n) > budget:
        raise ValueError("automorphism enumeration exceeds budget")
    out = []
    els = list(f.elements())
    for flat in itertools.product(els, repeat=n * n):
        beta = la.unflatten(list(flat), n, n)
        if _check_automorphism(S, beta):
            out.append(beta)
    return out


def twisted_frobenius_check(ext, beta, budget=DEFAULT_BUDGET):
    """Whether R is isomorphic to R* as S-R-bimodules after twisting the
    left S-action on R by the automorphism beta of S."""
    if not _check_automorphism(ext.S, beta):
        raise NotAutomorphism("beta is not an algebra automorphism of S")
    f = ext.R.field
    if not is_fgp(ext, "right", budget).is_true:
        return _false(reason="R not f.g. projective as right S-module")
    Mstar, _ = _frobenius_hom_space(ext)
    if Mstar.dim != ext.R.dim:
        return _false(reason="dim R* != dim R")
    N = mod.natural_bimodule(ext, "R_as_SRR").twist_left(beta)
    homs = mod.hom_bimodules(N, Mstar.bim)
    status, coeffs = invertible_combination(f, homs, ext.R.dim, budget)
    if status == "none":
        return _false(certificate="NoInvertibleElement")
    if status == "unknown":
        return _unknown("invertibility search budget exceeded")
    phi = _mat_combo(f, homs, coeffs, ext.R.dim, ext.R.dim)
    return _true(witness={"phi": ser_mat(f, phi)}, phi=phi)


def is_extended_inner(ext, beta, budget=DEFAULT_BUDGET):
    """Search a unit u of R with beta(s) = u iota(s) u^{-1} on S (finite
    fields only, budgeted)."""
    if not _check_automorphism(ext.S, beta):
        raise NotAutomorphism("beta is not an algebra automorphism of S")
    R = ext.R
    f = R.field
    if isinstance(f, Rationals):
        return _unknown("unit search not supported over Q", certificate="Budget")
    if f.size ** R.dim > budget:
        return _unknown("unit search budget exceeded")
    cols = ext.embedded_basis()
    bcols = la.transpose(beta)
    for u in R.elements():
        uinv = R.invert_element(u)
        if uinv is None:
            continue
        if all(
            R.mul_vec(R.mul_vec(u, cols[i]), uinv) == ext.embed(bcols[i])
            for i in range(ext.S.dim)
        ):
            return _true(witness={"unit": ser_vec(f, list(u))}, unit=list(u))
    return _false(reason="no conjugating unit exists (exhaustive)")


# ---------------------------------------------------------------------------
# reports and the implication lattice

PROPERTIES = [
    "split",
    "separable",
    "fgp_left",
    "fgp_right",
    "frobenius",
    "qf_left",
    "qf_right",
    "qf",
    "h_separable",
    "centrally_projective",
    "biseparable",
]


def decide_property(ext, name, budget=DEFAULT_BUDGET):
    if name == "split":
        return is_split_ext(ext, budget)
    if name == "separable":
        return is_separable_ext(ext, budget)
    if name == "fgp_left":
        return is_fgp(ext, "left", budget)
    if name == "fgp_right":
        return is_fgp(ext, "right", budget)
    if name == "frobenius":
        return is_frobenius_ext(ext, budget)
    if name == "qf_left":
        return is_qf_ext(ext, "left", budget)
    if name == "qf_right":
        return is_qf_ext(ext, "right", budget)
    if name == "qf":
        left = is_qf_ext(ext, "left", budget)
        right = is_qf_ext(ext, "right", budget)
        if left.is_true and right.is_true:
            return _true(witness={"left": left.to_json(), "right": right.to_json()})
        if left.is_unknown or right.is_unknown:
            return _unknown("one-sided QF decision unknown")
        return _false(reason="qf fails on at least one side")
    if name == "h_separable":
        return is_h_separable(ext, budget)
    if name == "centrally_projective":
        return is_centrally_projective(ext, budget)
    if name == "biseparable":
        return is_biseparable_ext(ext, budget)
    raise ValueError("unknown property %r" % (name,))


IMPLICATIONS = [
    (("frobenius",), "qf_left"),
    (("frobenius",), "qf_right"),
    (("qf_left",), "fgp_left"),
    (("qf_right",), "fgp_right"),
    (("h_separable",), "separable"),
    (("biseparable",), "split"),
    (("biseparable",), "separable"),
    (("biseparable",), "fgp_left"),
    (("biseparable",), "fgp_right"),
    (("centrally_projective", "biseparable"), "qf_left"),
    (("centrally_projective", "biseparable"), "qf_right"),
]


def implication_violations(verdicts):
    """Violated implications among computed verdicts (unknowns don't fire)."""
    out = []
    for premises, conclusion in IMPLICATIONS:
        if conclusion not in verdicts:
            continue
        if all(verdicts.get(p) == TRUE for p in premises):
            if verdicts[conclusion] == FALSE:
                out.append("%s => %s" % (" & ".join(premises), conclusion))
    return out


BIMODULE_PROPERTIES = [
    "fgp_left",
    "fgp_right",
    "separable_bimodule",
    "frobenius_bimodule",
]


def decide_bimodule_property(M, name, budget=DEFAULT_BUDGET):
    if name == "separable_bimodule":
        return is_separable_bimodule(M, budget)
    if name == "frobenius_bimodule":
        return is_frobenius_bimodule(M, budget)
    if name in ("fgp_left", "fgp_right"):
        side = name.split("_")[1]
        ok, wit, detail = bimodule_fgp(M, side)
        if not ok:
            return _false(reason=detail)
        f = M.field
        return _true(
            witness={
                "fs": [ser_mat(f, F) for F in wit.fs],
                "gs": [ser_mat(f, G) for G in wit.gs],
            }
        )
    raise ValueError("unknown bimodule property %r" % (name,))


def bimodule_report(M, props=None, budget=DEFAULT_BUDGET, witnesses=False,
                    timing=True):
    props = list(props) if props else list(BIMODULE_PROPERTIES)
    entries = {}
    for p in props:
        t0 = time.monotonic()
        out = decide_bimodule_property(M, p, budget)
        ms = int((time.monotonic() - t0) * 1000)
        entry = out.to_json(with_witness=witnesses)
        if timing:
            entry["ms"] = ms
        entries[p] = entry
    return {
        "subject": "bimodule",
        "field": M.field.to_json(),
        "dim_T": M.T.dim,
        "dim_R": M.R.dim,
        "dim_M": M.dim,
        "properties": entries,
        "implication_violations": [],
    }


def property_report(ext, props=None, budget=DEFAULT_BUDGET, witnesses=False,
                    subject=None, timing=True):
    props = list(props) if props else list(PROPERTIES)
    entries = {}
    verdicts = {}
    for p in props:
        t0 = time.monotonic()
        out = decide_property(ext, p, budget)
        ms = int((time.monotonic() - t0) * 1000)
        entry = out.to_json(with_witness=witnesses)
        if timing:
            entry["ms"] = ms
        entries[p] = entry
        verdicts[p] = out.verdict
    return {
        "subject": subject or "extension",
        "field": ext.R.field.to_json(),
        "dim_R": ext.R.dim,
        "dim_S": ext.S.dim,
        "properties": entries,
        "implication_violations": implication_violations(verdicts),
    }
