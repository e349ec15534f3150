import itertools

import pytest

from bisep import algebra as alg
from bisep import linalg as la
from bisep.fields import F2, F3, QQ, PrimeField


def test_validation_catches_bad_tables():
    # non-associative: e1*e1 = e0 but e0 is not a unit for e1
    table = [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]
    with pytest.raises(alg.AlgebraError):
        alg.Algebra(F2, table, [1, 0])


def test_matrix_algebra_center_is_scalars():
    A = alg.matrix_algebra(F3, 2)
    c = A.center()
    assert len(c) == 1
    assert la.span_rref(F3, c) == la.span_rref(F3, [A.unit])


def test_group_algebra_requires_a_group():
    with pytest.raises(alg.AlgebraError):
        alg.validate_cayley_table([[0, 0], [0, 0]])
    assert alg.validate_cayley_table(alg.cyclic_table(3)) == 0
    assert len(alg.s3_table()) == 6
    assert len(alg.d4_table()) == 8


def test_opposite_and_direct_sum():
    T = alg.upper_triangular(F2, 2)
    Top = alg.opposite(T)
    x, y = [1, 1, 0], [0, 1, 1]
    assert Top.mul_vec(x, y) == T.mul_vec(y, x)
    D = alg.direct_sum(T, alg.diagonal_algebra(F2, 1))
    assert D.dim == 4
    assert D.unit == [1, 0, 1, 1]


# ---------------------------------------------------------------------------
# radical against a brute-force largest-nilpotent-ideal oracle


def brute_force_radical(A, max_gens=3):
    """Largest nilpotent ideal among those generated by small subsets."""
    els = [list(e) for e in A.elements()]
    best = []
    for k in range(1, max_gens + 1):
        for gens in itertools.combinations(range(len(els)), k):
            basis = alg.ideal_closure(A, [els[g] for g in gens])
            if basis and alg.is_nilpotent_space(A, basis):
                if len(basis) > len(best):
                    best = basis
    return la.span_rref(A.field, best)


RADICAL_CASES = [
    lambda: alg.upper_triangular(F2, 2),
    lambda: alg.diagonal_algebra(F2, 3),
    lambda: alg.group_algebra(F2, alg.cyclic_table(2)),
    lambda: alg.group_algebra(F3, alg.cyclic_table(3)),
    lambda: alg.group_algebra(F3, alg.cyclic_table(2)),
    lambda: alg.matrix_algebra(F2, 2),
]


def test_radical_matches_brute_force():
    for build in RADICAL_CASES:
        A = build()
        got = la.span_rref(A.field, A.radical())
        want = brute_force_radical(A)
        assert got == want


def test_radical_known_values():
    T = alg.upper_triangular(QQ, 2)
    rad = T.radical()
    # span of E12
    assert la.span_rref(QQ, rad) == la.span_rref(QQ, [[QQ.zero, QQ.one, QQ.zero]])
    assert not T.is_semisimple()
    assert alg.matrix_algebra(QQ, 2).is_semisimple()
    # Maschke: F_2[C_2] is not semisimple, F_3[C_2] is
    assert not alg.group_algebra(F2, alg.cyclic_table(2)).is_semisimple()
    assert alg.group_algebra(F3, alg.cyclic_table(2)).is_semisimple()


def test_radical_over_extension_field_restriction():
    from bisep.fields import ExtField

    f4 = ExtField(2, 2)
    T = alg.upper_triangular(f4, 2)
    assert len(T.radical()) == 1


def test_qf_ring():
    assert alg.matrix_algebra(F2, 2).is_qf_ring()
    assert alg.diagonal_algebra(F2, 2).is_qf_ring()
    assert alg.group_algebra(F2, alg.cyclic_table(2)).is_qf_ring()
    assert not alg.upper_triangular(F2, 2).is_qf_ring()


def test_subalgebra_and_closure():
    A = alg.matrix_algebra(F2, 2)
    basis = alg.subalgebra_closure(A, [[1, 0, 0, 0]])
    S, iota = alg.subalgebra(A, basis)
    assert S.dim == 2  # span{E11, 1}
    # iota is an algebra map: check on the subalgebra's own table
    cols = la.transpose(iota)
    for i in range(S.dim):
        for j in range(S.dim):
            assert la.mat_vec(F2, iota, S.table[i][j]) == A.mul_vec(cols[i], cols[j])


def test_ideal_closure_and_quotient():
    T = alg.upper_triangular(F2, 2)
    J = alg.ideal_closure(T, [[0, 1, 0]])
    assert alg.is_ideal(T, J)
    Q, project = alg.quotient_by_ideal(T, J)
    assert Q.dim == 2
    assert Q.is_semisimple()


def test_trivial_extension_multiplication():
    R = alg.diagonal_algebra(F2, 2)
    acts = alg.ideal_as_bimodule(R, [[1, 0]])
    A = alg.trivial_extension(R, *acts)
    assert A.dim == 3
    # (e1, 0) * (0, x) = (0, e1 x) = (0, x)
    assert A.mul_vec([1, 0, 0], [0, 0, 1]) == [0, 0, 1]
    assert A.mul_vec([0, 1, 0], [0, 0, 1]) == [0, 0, 0]


def test_enveloping_algebra_dim():
    # S (x) R^op
    S = alg.diagonal_algebra(F2, 2)
    R = alg.upper_triangular(F2, 2)
    E = alg.enveloping(S, R)
    assert E.dim == S.dim * R.dim
