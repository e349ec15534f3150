"""Linear algebra against a naive Fraction-based elimination oracle."""

import random
from fractions import Fraction

from bisep import linalg as la
from bisep.fields import F2, F3, QQ, PrimeField


def naive_rank(field, A):
    """Textbook Gauss-Jordan, no fraction-free tricks: the oracle."""
    A = [list(r) for r in A]
    if not A:
        return 0
    rows, cols = len(A), len(A[0])
    rank = 0
    for c in range(cols):
        piv = None
        for r in range(rank, rows):
            if A[r][c] != field.zero:
                piv = r
                break
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = field.inv(A[rank][c])
        A[rank] = [field.mul(inv, x) for x in A[rank]]
        for r in range(rows):
            if r != rank and A[r][c] != field.zero:
                f = A[r][c]
                A[r] = [field.sub(x, field.mul(f, y)) for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank


def random_matrix(field, rng, m, n):
    if field is QQ:
        return [
            [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)]
            for _ in range(m)
        ]
    return [[rng.randrange(field.p) for _ in range(n)] for _ in range(m)]


def test_rank_matches_naive_oracle():
    rng = random.Random(5)
    for field in (QQ, F2, F3, PrimeField(5)):
        for _ in range(60):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            A = random_matrix(field, rng, m, n)
            assert la.rank(field, A) == naive_rank(field, A)


def test_kernel_is_exact():
    rng = random.Random(6)
    for field in (QQ, F2, F3):
        for _ in range(40):
            m, n = rng.randint(1, 4), rng.randint(1, 5)
            A = random_matrix(field, rng, m, n)
            ker = la.kernel(field, A)
            assert len(ker) == n - la.rank(field, A)
            for v in ker:
                assert la.is_zero_vec(field, la.mat_vec(field, A, v))
            # kernel vectors are independent
            assert la.rank(field, ker) == len(ker) if ker else True


def test_solve_particular_plus_kernel():
    rng = random.Random(7)
    for field in (QQ, F3):
        for _ in range(40):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            A = random_matrix(field, rng, m, n)
            x = [field.from_int(rng.randint(-3, 3)) for _ in range(n)]
            b = la.mat_vec(field, A, x)
            sol = la.solve(field, A, b)
            assert sol is not None
            part, ker = sol
            assert la.mat_vec(field, A, part) == [field.add(v, field.zero) for v in b]
            assert len(ker) == n - la.rank(field, A)


def test_solve_detects_inconsistency():
    A = [[1, 0], [1, 0]]
    assert la.solve(F2, A, [1, 0]) is None


def test_inverse_round_trip():
    rng = random.Random(8)
    for field in (QQ, F2, F3):
        done = 0
        while done < 20:
            n = rng.randint(1, 4)
            A = random_matrix(field, rng, n, n)
            if not la.is_invertible(field, A):
                continue
            inv = la.mat_inverse(field, A)
            assert la.mat_mul(field, A, inv) == la.identity(field, n)
            assert la.mat_mul(field, inv, A) == la.identity(field, n)
            done += 1


def test_rref_is_canonical_for_the_row_space():
    rng = random.Random(9)
    for _ in range(30):
        A = random_matrix(F2, rng, 3, 4)
        shuffled = list(A)
        rng.shuffle(shuffled)
        assert la.span_rref(F2, A) == la.span_rref(F2, shuffled)


def test_span_membership_and_intersection():
    u = la.span_rref(QQ, [[Fraction(1), Fraction(1), Fraction(0)]])
    v = la.span_rref(QQ, [[Fraction(1), Fraction(1), Fraction(1)],
                          [Fraction(0), Fraction(0), Fraction(1)]])
    assert la.in_span(QQ, v, [Fraction(1), Fraction(1), Fraction(0)])
    inter = la.intersect_spans(QQ, u, v, 3)
    assert la.span_rref(QQ, inter) == u


def test_coord_system_express():
    cs = la.CoordSystem(F3, [[1, 0, 1], [0, 1, 2]])
    assert cs.express([1, 1, 0]) == [1, 1]


def test_bareiss_has_no_fraction_blowup():
    # an integer matrix whose naive elimination introduces denominators;
    # the result must still be exact
    A = [[Fraction(x) for x in row] for row in [[2, 4, 4], [3, 7, 5], [5, 9, 13]]]
    assert la.rank(QQ, A) == naive_rank(QQ, A)
