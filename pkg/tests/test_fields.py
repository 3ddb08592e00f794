from fractions import Fraction

import pytest

from prealt.errors import BadCharacteristic, ParseError
from prealt.fields import FpElement, PrimeField, QQ, convert_scalar


def test_char_two_rejected():
    with pytest.raises(BadCharacteristic):
        PrimeField(2)


def test_non_prime_rejected():
    with pytest.raises(ParseError):
        PrimeField(9)


def test_rational_parse_and_encode_roundtrip():
    for text in ["1/2", "-3", "0", "22/7"]:
        x = QQ.parse(text)
        assert QQ.parse(QQ.encode(x)) == x
    with pytest.raises(ParseError):
        QQ.parse(3)  # rationals are encoded as strings
    with pytest.raises(ParseError):
        QQ.parse("1/0")


def test_prime_field_parse_range():
    F = PrimeField(5)
    assert F.parse(3) == F.scalar(3)
    with pytest.raises(ParseError):
        F.parse(5)
    with pytest.raises(ParseError):
        F.parse("3")
    with pytest.raises(ParseError):
        F.parse(True)


def test_fp_arithmetic():
    F = PrimeField(7)
    a, b = F.scalar(3), F.scalar(5)
    assert a + b == 1
    assert a - b == 5
    assert a * b == 1
    assert a / b == F.scalar(2)  # 3 * 5^{-1} = 3 * 3 = 2
    assert -a == 4
    assert bool(F.zero) is False and bool(a) is True
    assert 2 * a == 6
    with pytest.raises(ZeroDivisionError):
        a / F.zero


def test_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        FpElement(1, 3) + FpElement(1, 5)


def test_ratio_needs_invertible_denominator():
    F = PrimeField(3)
    assert F.ratio(1, 2) == F.scalar(2)
    with pytest.raises(BadCharacteristic):
        F.ratio(1, 3)
    assert QQ.ratio(2, 4) == Fraction(1, 2)


def test_convert_scalar_reduction():
    F = PrimeField(5)
    assert convert_scalar(Fraction(1, 2), QQ, F) == F.scalar(3)
    with pytest.raises(BadCharacteristic):
        convert_scalar(Fraction(1, 5), QQ, F)
