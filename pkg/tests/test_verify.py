"""Sanity checks for the verification suite's own machinery."""

from bisep import algebra as alg
from bisep import verify
from bisep.fields import F2


def test_packed_gf2_matrix_ops():
    m = 3
    ident = verify._gfid(m)
    for a in (0b000000001, 0b010001100, 0b111010001):
        assert verify._gfmul(a, ident, m) == a
        assert verify._gfmul(ident, a, m) == a
    gl = verify._gl(2)
    assert len(gl) == 6  # |GL_2(F_2)|
    assert len(verify._gl(3)) == 168
    for P in gl:
        assert verify._gfmul(P, verify._inv_packed(P, 2), 2) == verify._gfid(2)


def test_module_structures_hand_count():
    # modules of dim 1 over F_2[C_2]: the generator must map to an
    # involution of F_2, i.e. 1; exactly one structure
    A = alg.group_algebra(F2, alg.cyclic_table(2))
    assert len(verify.enumerate_module_structures(A, 1)) == 1
    # over F_2 x F_2 each basis idempotent maps to 0 or 1 with sum 1:
    # exactly two 1-dimensional structures
    D = alg.diagonal_algebra(F2, 2)
    assert len(verify.enumerate_module_structures(D, 1)) == 2
    # M_2(F_2) has no 1-dimensional modules
    M = alg.matrix_algebra(F2, 2)
    assert len(verify.enumerate_module_structures(M, 1)) == 0
    # and its 2-dimensional structures form a single GL_2-orbit
    structs = verify.enumerate_module_structures(M, 2)
    gl = verify._gl(2)
    canon = {verify.canonical_module(s, 2, gl) for s in structs}
    assert len(canon) == 1 and len(structs) == 6


def test_indecomposable_decomposition():
    gl_cache = {1: verify._gl(1), 2: verify._gl(2)}
    # regular module of F_2 x F_2 splits into the two idempotent lines
    D = alg.diagonal_algebra(F2, 2)
    reg = tuple(
        verify.enumerate_module_structures(D, 2)[0]
        for _ in range(1)
    )[0]
    types = verify.indecomposable_types(reg, 2, gl_cache)
    assert len(types) == 2
    assert all(t[0] == 1 for t in types)
    # regular module of F_2[C_2] is indecomposable
    A = alg.group_algebra(F2, alg.cyclic_table(2))
    regs = verify.enumerate_module_structures(A, 2)
    # pick the structure where the generator acts nontrivially
    nontriv = [s for s in regs if s[1] != verify._gfid(2)]
    assert nontriv
    types = verify.indecomposable_types(nontriv[0], 2, gl_cache)
    assert types == [(2, verify.canonical_module(nontriv[0], 2, gl_cache[2]))]


def test_random_extensions_deterministic():
    a = verify.random_extensions(10, seed=3)
    b = verify.random_extensions(10, seed=3)
    assert [(e.R.table, e.iota) for e in a] == [(e.R.table, e.iota) for e in b]


def test_run_all_reports_every_check(monkeypatch):
    monkeypatch.setattr(verify, "CHECKS", verify.CHECKS[:2])
    results = verify.run_all()
    assert len(results) == 2
    assert all(r["pass"] for r in results)
    assert all("ms" in r for r in results)
