from fractions import Fraction

import pytest

from bisep.fields import (
    F2,
    F3,
    QQ,
    DivisionByZero,
    ExtField,
    FieldError,
    PrimeField,
    check_same_field,
    field_from_json,
    find_irreducible,
)


def test_rationals_arithmetic():
    a = Fraction(3, 4)
    b = Fraction(-2, 5)
    assert QQ.add(a, b) == Fraction(7, 20)
    assert QQ.mul(a, b) == Fraction(-3, 10)
    assert QQ.inv(a) == Fraction(4, 3)
    assert QQ.sub(a, a) == QQ.zero
    with pytest.raises(DivisionByZero):
        QQ.inv(QQ.zero)


def test_prime_field_inverses_exhaustive():
    f = PrimeField(7)
    for a in range(1, 7):
        assert f.mul(a, f.inv(a)) == f.one
    with pytest.raises(DivisionByZero):
        f.inv(0)


def test_prime_field_rejects_composite():
    with pytest.raises(FieldError):
        PrimeField(6)
    with pytest.raises(FieldError):
        PrimeField(1)


def test_ext_field_is_a_field():
    f4 = ExtField(2, 2)
    els = list(f4.elements())
    assert len(els) == 4
    for a in els:
        for b in els:
            # commutativity and distributivity spot checks
            assert f4.mul(a, b) == f4.mul(b, a)
        if a != f4.zero:
            assert f4.mul(a, f4.inv(a)) == f4.one
    # the multiplicative group of F_4 is cyclic of order 3
    x = (0, 1)
    assert f4.mul(x, f4.mul(x, x)) == f4.one


def test_ext_field_frobenius():
    f9 = ExtField(3, 2)
    for a in f9.elements():
        assert f9.frobenius(a) == f9.mul(a, f9.mul(a, a))
        assert f9.frobenius(a, 2) == a


def test_find_irreducible():
    # x^2 + x + 1 is the unique monic irreducible quadratic over F_2
    assert find_irreducible(2, 2) == [1, 1, 1]
    with pytest.raises(FieldError):
        ExtField(2, 2, modulus=[0, 0, 1])  # x^2 is reducible


def test_scalar_json_roundtrip():
    assert QQ.scalar_from_json(QQ.scalar_to_json(Fraction(-7, 3))) == Fraction(-7, 3)
    assert F3.scalar_from_json(F3.scalar_to_json(2)) == 2
    f4 = ExtField(2, 2)
    a = (1, 1)
    assert f4.scalar_from_json(f4.scalar_to_json(a)) == a


def test_field_json_roundtrip():
    for f in (QQ, F2, F3, ExtField(2, 3)):
        assert field_from_json(f.to_json()) == f


def test_check_same_field():
    check_same_field(F2, PrimeField(2))
    with pytest.raises(FieldError):
        check_same_field(F2, F3)
