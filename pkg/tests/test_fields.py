import random
from fractions import Fraction

import pytest

from semimod.errors import (
    DivisionByZeroError,
    InfiniteFieldError,
    MismatchedFieldError,
)
from semimod.fields import (
    QQ,
    PrimeField,
    QuadraticField,
    enumerate_field,
    field_add,
    field_from_flag,
    field_from_name,
    field_inv,
    field_mul,
    field_neg,
    quadratic_modulus,
)


def test_rational_addition():
    # 1/2 + 1/3 = 5/6
    assert field_add(QQ.element(Fraction(1, 2)), QQ.element(Fraction(1, 3))) == QQ.element(Fraction(5, 6))


def test_prime_inverse():
    F5 = PrimeField(5)
    assert field_inv(F5.element(2)) == F5.element(3)


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZeroError):
        field_inv(QQ.element(0))
    with pytest.raises(DivisionByZeroError):
        field_inv(PrimeField(5).element(0))
    with pytest.raises(DivisionByZeroError):
        field_inv(QuadraticField(3).element((0, 0)))


def test_enumerate_prime_field():
    F3 = PrimeField(3)
    elems = list(enumerate_field(F3))
    assert len(elems) == 3
    assert elems == [F3.element(0), F3.element(1), F3.element(2)]


def test_enumerate_quadratic_extension_of_f2():
    F4 = QuadraticField(2)
    elems = list(enumerate_field(F4))
    assert len(elems) == 4
    assert len(set(elems)) == 4


def test_enumerate_rationals_raises():
    with pytest.raises(InfiniteFieldError):
        list(enumerate_field(QQ))


def test_mismatched_fields_raise():
    with pytest.raises(MismatchedFieldError):
        field_add(PrimeField(3).element(1), PrimeField(5).element(1))


@pytest.mark.parametrize(
    "field",
    [QQ, PrimeField(2), PrimeField(5), PrimeField(7), QuadraticField(3)],
    ids=repr,
)
def test_field_axioms_on_random_triples(field):
    rng = random.Random(7)

    def pick():
        if field is QQ:
            return QQ.element(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        return field.element(rng.randrange(field.size))

    # QuadraticField elements need two coordinates
    def pick_elem():
        if isinstance(field, QuadraticField):
            return field.element((rng.randrange(field.p), rng.randrange(field.p)))
        return pick()

    for _ in range(60):
        a, b, c = pick_elem(), pick_elem(), pick_elem()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert a + field.zero == a
        assert a * field.one == a
        if a:
            assert a * a.inverse() == field.one


@pytest.mark.parametrize(
    "field", [QQ, PrimeField(5), QuadraticField(3)], ids=repr
)
def test_canonical_zero(field):
    rng = random.Random(3)
    for _ in range(30):
        if isinstance(field, QuadraticField):
            a = field.element((rng.randrange(field.p), rng.randrange(field.p)))
        elif field is QQ:
            a = field.element(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        else:
            a = field.element(rng.randrange(field.size))
        total = a + (-a)
        assert total.value == field.zero_raw
        assert hash(total) == hash(field.zero)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_quadratic_extension_satisfies_frobenius(p):
    field = QuadraticField(p)
    elems = list(enumerate_field(field))
    assert len(elems) == p * p
    assert len(set(elems)) == p * p
    for e in elems:
        assert e ** (p * p) == e


def test_quadratic_modulus_is_smallest():
    # exhaustively verified smallest irreducible monic quadratics
    assert quadratic_modulus(2) == (1, 1)  # t^2 + t + 1
    assert quadratic_modulus(3) == (0, 1)  # t^2 + 1


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        QuadraticField(3, modulus=(0, 2))  # t^2 + 2 = (t-1)(t+1) over F_3


def test_nonprime_rejected():
    with pytest.raises(ValueError):
        PrimeField(6)


def test_field_names():
    assert field_from_name("Q") is QQ or field_from_name("Q") == QQ
    assert field_from_name("F7") == PrimeField(7)
    assert field_from_name("F3^2") == QuadraticField(3)
    assert field_from_flag("3") == PrimeField(3)
    assert field_from_flag("3^2") == QuadraticField(3)


def test_extension_scalar_formatting():
    F9 = QuadraticField(3)
    assert str(F9.element((0, 0))) == "0"
    assert str(F9.element((2, 0))) == "2"
    assert str(F9.element((0, 1))) == "t"
    assert str(F9.element((1, 2))) == "1+2*t"


def test_negative_field_negation():
    assert field_neg(QQ.element(Fraction(3, 4))) == QQ.element(Fraction(-3, 4))
    assert field_mul(QQ.element(2), QQ.element(Fraction(1, 2))) == QQ.one
