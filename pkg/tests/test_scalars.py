from fractions import Fraction

import pytest

from repkron.scalars import (
    Field,
    MixedRingError,
    RATIONALS,
    TruncatedRing,
    field_from_name,
)


def test_rationals_arithmetic():
    f = RATIONALS
    a, b = f.from_int(3), Fraction(1, 2)
    assert f.add(a, b) == Fraction(7, 2)
    assert f.mul(a, b) == Fraction(3, 2)
    assert f.inv(b) == 2
    assert f.characteristic == 0
    assert f.is_field


def test_prime_field_arithmetic():
    f = Field(5)
    assert f.add(3, 4) == 2
    assert f.mul(3, 4) == 2
    assert f.inv(3) == 2  # 3 * 2 = 6 = 1 mod 5
    assert f.neg(1) == 4
    assert f.characteristic == 5


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        Field(6)


def test_field_from_name_roundtrip():
    assert field_from_name("Q") == RATIONALS
    assert field_from_name("F7") == Field(7)
    assert field_from_name(Field(11).name) == Field(11)
    with pytest.raises(ValueError):
        field_from_name("R")


def test_format_parse_roundtrip():
    f = RATIONALS
    for x in (Fraction(-3, 7), Fraction(0), Fraction(5)):
        assert f.parse(f.format(x)) == x
    g = Field(13)
    for x in range(13):
        assert g.parse(g.format(x)) == x


def test_truncated_ring_mul_truncates():
    R = TruncatedRing(RATIONALS, 3)
    t = R.t
    t2 = R.mul(t, t)
    assert t2 == (Fraction(0), Fraction(0), Fraction(1))
    assert R.mul(t2, t) == R.zero  # t^3 = 0


def test_truncated_ring_inverse():
    R = TruncatedRing(Field(7), 4)
    a = (1, 3, 0, 5)
    assert R.mul(a, R.inv(a)) == R.one
    with pytest.raises(ZeroDivisionError):
        R.inv((0, 1, 0, 0))


def test_reduce_mod_t_is_ring_map():
    R = TruncatedRing(RATIONALS, 4)
    a = tuple(Fraction(x) for x in (1, 2, 3, 4))
    b = tuple(Fraction(x) for x in (2, 0, 1, 5))
    S = TruncatedRing(RATIONALS, 2)
    assert R.reduce_mod_t(R.mul(a, b), 2) == S.mul(a[:2], b[:2])
    assert R.reduce_mod_t(R.add(a, b), 2) == S.add(a[:2], b[:2])


def test_mixed_order_rejected():
    R = TruncatedRing(RATIONALS, 3)
    with pytest.raises(MixedRingError):
        R.add(R.zero, (Fraction(0),) * 2)


def test_order_one_is_a_field():
    assert TruncatedRing(RATIONALS, 1).is_field
    assert not TruncatedRing(RATIONALS, 2).is_field
