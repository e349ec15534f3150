"""Module/bimodule machinery, cross-checked against brute-force oracles."""

import itertools

import pytest

from bisep import algebra as alg
from bisep import linalg as la
from bisep import modules as mod
from bisep.fields import F2, F3, QQ


def diag_over_diag():
    R = alg.diagonal_algebra(F2, 2)
    S, iota = alg.subalgebra(R, [[1, 1]])
    return mod.Extension(S, R, iota)


def m2_over_t2():
    R = alg.matrix_algebra(F2, 2)
    basis = [la.unit_vec(F2, 4, i) for i in (0, 1, 3)]
    S, iota = alg.subalgebra(R, basis)
    return mod.Extension(S, R, iota)


def test_extension_validation():
    R = alg.diagonal_algebra(F2, 2)
    S = alg.diagonal_algebra(F2, 1)
    with pytest.raises(mod.NotAnExtension):
        mod.Extension(S, R, [[1], [0]])  # does not preserve the unit


def test_natural_bimodules_validate():
    ext = m2_over_t2()
    for pattern in ("R_as_RRS", "R_as_SRR", "R_as_SRS", "R_as_RRR", "S_as_SSS"):
        M = mod.natural_bimodule(ext, pattern)
        M.validate()


# ---------------------------------------------------------------------------
# hom spaces against exhaustive enumeration over F_2


def brute_force_homs(field, dimM, dimN, actsM, actsN):
    out = []
    for flat in itertools.product([field.zero, field.one], repeat=dimN * dimM):
        Fm = la.unflatten(list(flat), dimN, dimM)
        if all(
            la.mat_mul(field, Fm, Am) == la.mat_mul(field, An, Fm)
            for Am, An in zip(actsM, actsN)
        ):
            out.append(la.flatten(Fm))
    return la.span_rref(field, out)


def test_hom_modules_matches_brute_force():
    for A in (
        alg.upper_triangular(F2, 2),
        alg.group_algebra(F2, alg.cyclic_table(2)),
        alg.matrix_algebra(F2, 2),
    ):
        reg = mod.left_regular_module(A)
        homs = mod.hom_modules(reg, reg)
        got = la.span_rref(F2, [la.flatten(H) for H in homs])
        want = brute_force_homs(F2, reg.dim, reg.dim, reg.action, reg.action)
        assert got == want


def test_hom_bimodules_matches_brute_force():
    ext = diag_over_diag()
    M = mod.natural_bimodule(ext, "R_as_SRS")
    N = mod.natural_bimodule(ext, "S_as_SSS")
    homs = mod.hom_bimodules(M, N)
    got = la.span_rref(F2, [la.flatten(H) for H in homs])
    want = brute_force_homs(F2, M.dim, N.dim, M.actions(), N.actions())
    assert got == want


# ---------------------------------------------------------------------------
# tensor products


def gf2_tensor_dim_oracle(ext):
    """Shared-nothing elimination oracle for dim R (x)_S R over F_2."""
    R, S = ext.R, ext.S
    n = R.dim
    cols = ext.embedded_basis()
    rows = []
    for a in range(n):
        for s in cols:
            for b in range(n):
                # (e_a . s) (x) e_b - e_a (x) (s . e_b)
                left = R.mul_vec(la.unit_vec(F2, n, a), list(s))
                right = R.mul_vec(list(s), la.unit_vec(F2, n, b))
                row = [0] * (n * n)
                for i, c in enumerate(left):
                    row[i * n + b] ^= c
                for j, c in enumerate(right):
                    row[a * n + j] ^= c
                rows.append(row)
    return n * n - la.rank(F2, rows)


def test_tensor_dim_m2_over_t2():
    # M_2(F_2) (x)_{T_2} M_2(F_2) has dimension 4
    ext = m2_over_t2()
    RRS = mod.natural_bimodule(ext, "R_as_RRS")
    SRR = mod.natural_bimodule(ext, "R_as_SRR")
    TP = mod.tensor_over(RRS, SRR)
    assert TP.dim == 4
    assert TP.dim == gf2_tensor_dim_oracle(ext)


def test_tensor_dim_small_cases():
    for build in (diag_over_diag,):
        ext = build()
        RRS = mod.natural_bimodule(ext, "R_as_RRS")
        SRR = mod.natural_bimodule(ext, "R_as_SRR")
        TP = mod.tensor_over(RRS, SRR)
        assert TP.dim == gf2_tensor_dim_oracle(ext)
    # R (x)_R R = R
    A = alg.upper_triangular(F2, 2)
    ext = mod.identity_extension(A)
    TP = mod.tensor_over(
        mod.natural_bimodule(ext, "R_as_RRS"), mod.natural_bimodule(ext, "R_as_SRR")
    )
    assert TP.dim == A.dim


def test_tensor_section_and_project():
    ext = diag_over_diag()
    TP = mod.tensor_over(
        mod.natural_bimodule(ext, "R_as_RRS"), mod.natural_bimodule(ext, "R_as_SRR")
    )
    for c in range(TP.dim):
        v = la.unit_vec(F2, TP.dim, c)
        assert TP.project(TP.lift(v)) == v


def test_tensor_actions_well_defined():
    ext = m2_over_t2()
    TP = mod.tensor_over(
        mod.natural_bimodule(ext, "R_as_RRS"), mod.natural_bimodule(ext, "R_as_SRR")
    )
    TP.bim.validate()


# ---------------------------------------------------------------------------
# duals


def test_dual_dims_of_regular():
    A = alg.upper_triangular(F3, 2)
    ext = mod.identity_extension(A)
    RRS = mod.natural_bimodule(ext, "R_as_RRS")
    D = mod.dual_right(RRS)
    assert D.dim == A.dim
    D.bim.validate()
    SRR = mod.natural_bimodule(ext, "R_as_SRR")
    DL = mod.dual_left(SRR)
    assert DL.dim == A.dim
    DL.bim.validate()


def test_dual_as_map_and_express_roundtrip():
    ext = m2_over_t2()
    RRS = mod.natural_bimodule(ext, "R_as_RRS")
    D = mod.dual_right(RRS)
    for i in range(D.dim):
        coords = la.unit_vec(F2, D.dim, i)
        assert D.express(D.as_map(coords)) == coords


# ---------------------------------------------------------------------------
# in_add


def test_in_add_reflexive_and_zero():
    A = alg.upper_triangular(F2, 2)
    reg = mod.left_regular_module(A)
    ok, wit, _ = mod.in_add_modules(reg, reg)
    assert ok and wit.verify(F2, reg.dim)


def test_in_add_negative():
    # the 1-dim trivial C_2-module is not a summand of ... itself twisted:
    # use simple vs regular over F_2[C_2]: the trivial module embeds but
    # is not a direct summand (the regular module is indecomposable)
    A = alg.group_algebra(F2, alg.cyclic_table(2))
    reg = mod.left_regular_module(A)
    triv = mod.Module(A, 1, [[[1]], [[1]]])
    ok, _, _ = mod.in_add_modules(triv, reg)
    assert not ok
    ok2, wit2, _ = mod.in_add_modules(reg, reg)
    assert ok2 and wit2.verify(F2, 2)


def test_in_add_direct_summand():
    A = alg.diagonal_algebra(F2, 2)
    reg = mod.left_regular_module(A)
    piece = mod.Module(A, 1, [[[1]], [[0]]])
    ok, wit, _ = mod.in_add_modules(piece, reg)
    assert ok and wit.verify(F2, 1)


def test_regular_in_add_of_dual():
    assert mod.regular_in_add_of_dual(alg.matrix_algebra(F2, 2))
    assert not mod.regular_in_add_of_dual(alg.upper_triangular(F2, 2))
