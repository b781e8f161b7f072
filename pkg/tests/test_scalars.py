from fractions import Fraction

import pytest

from quadralg.scalars import QQ, GF, field_from_descriptor


def test_rational_coercion():
    assert QQ(3) == Fraction(3)
    assert QQ("2/5") == Fraction(2, 5)
    assert QQ.one / QQ(4) == Fraction(1, 4)


def test_rational_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QQ.one / QQ.zero


def test_prime_field_arithmetic():
    F = GF(7)
    a, b = F(3), F(5)
    assert a + b == F(1)
    assert a * b == F(1)
    assert a / b == F(3) * F(3)  # 5^{-1} = 3 mod 7
    assert -a == F(4)
    assert bool(F(0)) is False


def test_prime_field_division_by_zero():
    F = GF(5)
    with pytest.raises(ZeroDivisionError):
        F(1) / F(0)
    with pytest.raises(ZeroDivisionError):
        F(Fraction(1, 5))


def test_nonprime_rejected():
    with pytest.raises(ValueError):
        GF(6)


def test_descriptor_roundtrip():
    assert field_from_descriptor("QQ") == QQ
    assert field_from_descriptor("11") == GF(11)
    assert field_from_descriptor(13) == GF(13)
