from fractions import Fraction

import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from unitnilpy.errors import (DivisionByZero, EntryOutOfField, MixedFields,
                              ModulusOutOfRange, NotPrime, ParseError)
from unitnilpy.exactalg.field import FieldSpec, Scalar, is_prime

F7 = FieldSpec.prime(7)
QQ = FieldSpec.rationals()


def test_is_prime_small_values():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_is_prime_large_values():
    assert is_prime(2 ** 31 - 1)
    assert not is_prime(2 ** 31 - 3)
    assert not is_prime(25326001)


def test_field_construction_errors():
    with pytest.raises(NotPrime):
        FieldSpec.prime(4)
    with pytest.raises(ModulusOutOfRange):
        FieldSpec.prime(1)
    with pytest.raises(ModulusOutOfRange):
        FieldSpec.prime(2 ** 31)


def test_field_flags_and_descriptors():
    assert FieldSpec.from_flag("fp:7") == F7
    assert FieldSpec.from_flag("q") == QQ
    assert FieldSpec.from_descriptor({"kind": "fp", "p": 7}) == F7
    assert FieldSpec.from_descriptor({"kind": "q"}) == QQ
    assert F7.descriptor() == {"kind": "fp", "p": 7}
    assert str(F7) == "F_7" and str(QQ) == "Q"
    with pytest.raises(ParseError):
        FieldSpec.from_flag("gf7")
    with pytest.raises(ParseError):
        FieldSpec.from_descriptor({"kind": "fp", "p": "7"})


def test_prime_field_arithmetic():
    a = Scalar.of(F7, 3)
    b = Scalar.of(F7, 5)
    assert a + b == 1
    assert a - b == 5
    assert a * b == 1
    assert a / b == 2
    assert (-a) == 4
    assert a.inv() == 5
    assert Scalar.of(F7, -1) == 6


def test_rational_arithmetic():
    a = Scalar.of(QQ, Fraction(1, 2))
    b = Scalar.of(QQ, Fraction(-3, 4))
    assert a + b == Fraction(-1, 4)
    assert a * b == Fraction(-3, 8)
    assert a / b == Fraction(-2, 3)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        Scalar.of(F7, 0).inv()
    with pytest.raises(DivisionByZero):
        Scalar.of(QQ, 1) / 0


def test_mixed_fields():
    with pytest.raises(MixedFields):
        Scalar.of(F7, 1) + Scalar.of(FieldSpec.prime(5), 1)
    with pytest.raises(MixedFields):
        Scalar.of(F7, 1) == Scalar.of(QQ, 1)


def test_coerce_rejects_inexact_values():
    with pytest.raises(EntryOutOfField):
        F7.coerce(0.5)
    with pytest.raises(EntryOutOfField):
        QQ.coerce(True)


def test_parse_and_format():
    assert F7.parse("-1") == 6
    assert F7.parse(" 15 ") == 1
    assert QQ.parse("-3/6") == Fraction(-1, 2)
    assert QQ.format(Fraction(-1, 2)) == "-1/2"
    assert QQ.format(Fraction(4)) == "4"
    assert F7.format(6) == "6"
    with pytest.raises(EntryOutOfField):
        F7.parse("1/2")
    with pytest.raises(EntryOutOfField):
        QQ.parse("1/0")
    with pytest.raises(ParseError):
        QQ.parse("1.5")


@seed(7)
@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=100))
def test_prime_field_inverse_property(value):
    spec = FieldSpec.prime(101)
    x = Scalar.of(spec, value)
    if value % 101:
        assert x * x.inv() == 1


@seed(11)
@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=-10 ** 12, max_value=10 ** 12), st.integers(min_value=1, max_value=10 ** 6))
def test_rational_format_parse_agree(num, den):
    value = Fraction(num, den)
    assert QQ.parse(QQ.format(value)) == value


element_pairs = st.tuples(st.integers(min_value=-50, max_value=50), st.integers(min_value=1, max_value=9))


def _element(spec, pair):
    num, den = pair
    return Scalar.of(spec, num if spec.is_prime_field else Fraction(num, den))


@pytest.mark.parametrize("spec", [FieldSpec.prime(2), FieldSpec.prime(3), F7, QQ])
@seed(23)
@settings(max_examples=60, deadline=None)
@given(element_pairs, element_pairs, element_pairs)
def test_field_axioms_on_sampled_triples(spec, x, y, z):
    a, b, c = (_element(spec, pair) for pair in (x, y, z))
    assert a + (b + c) == (a + b) + c
    assert a * (b * c) == (a * b) * c
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a + (-a)).is_zero()
    assert a * 1 == a
    if not a.is_zero():
        assert a * a.inv() == 1
