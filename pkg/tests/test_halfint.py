from fractions import Fraction

import pytest

from so5racah.halfint import HalfInt, hi, idim, jrange, mrange, phase, \
    sign_pow, triangle, trirange


def test_construction_takes_doubled_value():
    assert HalfInt(3).as_fraction() == Fraction(3, 2)
    assert HalfInt(4) == 2
    assert str(HalfInt(3)) == "3/2"
    assert str(HalfInt(4)) == "2"
    assert str(HalfInt(-1)) == "-1/2"


def test_make_and_parse():
    assert hi(2).twice == 4
    assert hi(Fraction(5, 2)).twice == 5
    assert HalfInt.parse("-3/2").twice == -3
    assert HalfInt.parse("2").twice == 4
    with pytest.raises(ValueError):
        hi(Fraction(1, 3))
    with pytest.raises(TypeError):
        hi(0.5)


def test_arithmetic_and_ordering():
    a = hi(Fraction(3, 2))
    b = hi(1)
    assert a + b == hi(Fraction(5, 2))
    assert a - b == hi(Fraction(1, 2))
    assert -a == hi(Fraction(-3, 2))
    assert abs(hi(Fraction(-1, 2))) == hi(Fraction(1, 2))
    assert b < a
    assert a + a == 3
    assert 2 - a == hi(Fraction(1, 2))
    assert sorted([a, b, hi(0)]) == [hi(0), b, a]


def test_hash_agrees_with_fraction():
    assert hash(hi(2)) == hash(Fraction(2))
    assert {hi(1): "x"}[hi(1)] == "x"


def test_views():
    assert hi(2).as_int() == 2
    with pytest.raises(ValueError):
        hi(Fraction(1, 2)).as_int()
    assert hi(Fraction(1, 2)).as_fraction() == Fraction(1, 2)
    assert float(hi(Fraction(3, 2))) == 1.5
    assert not hi(Fraction(1, 2)).is_integer
    assert hi(3).is_integer


def test_ranges():
    assert [x.twice for x in jrange(Fraction(1, 2), Fraction(5, 2))] == [1, 3, 5]
    assert [x.twice for x in mrange(1)] == [-2, 0, 2]
    assert [x.twice for x in trirange(1, Fraction(1, 2))] == [1, 3]
    assert trirange(0, Fraction(3, 2)) == [hi(Fraction(3, 2))]


def test_triangle():
    assert triangle(1, 1, 2)
    assert not triangle(1, 1, 3)
    assert triangle(Fraction(1, 2), Fraction(1, 2), 1)
    # integer perimeter: (1/2, 1/2, 1/2) is never a triangle
    assert not triangle(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))


def test_phase_and_dim():
    assert sign_pow(-3) == -1
    assert phase(1, 2) == -1
    assert phase(Fraction(1, 2), Fraction(3, 2)) == 1
    with pytest.raises(ValueError):
        phase(Fraction(1, 2))
    assert idim(Fraction(3, 2)) == 4
    assert idim(2) == 5
