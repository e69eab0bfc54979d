from fractions import Fraction

import pytest

from currentalg import GaussianRational, Q, QI, ScalarError
from currentalg import scalars


def test_gaussian_arithmetic():
    a = GaussianRational(Fraction(1, 2), Fraction(1, 3))
    b = GaussianRational(2, -1)
    assert a + b == GaussianRational(Fraction(5, 2), Fraction(-2, 3))
    assert a * b == GaussianRational(Fraction(4, 3), Fraction(1, 6))
    assert (a * b) / b == a
    assert -a == GaussianRational(Fraction(-1, 2), Fraction(-1, 3))
    assert (a - a) == 0


def test_gaussian_interop_with_fraction_and_int():
    i = GaussianRational(0, 1)
    assert i * i == -1
    assert 1 + i == GaussianRational(1, 1)
    assert Fraction(1, 2) * i == GaussianRational(0, Fraction(1, 2))
    assert 1 / i == -i
    assert hash(GaussianRational(Fraction(3, 4), 0)) == hash(Fraction(3, 4))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GaussianRational(1) / GaussianRational(0)


def test_floats_rejected_everywhere():
    with pytest.raises(ScalarError):
        GaussianRational(0.5)
    with pytest.raises(ScalarError):
        scalars.coerce(Q, 0.5)


def test_coerce_field_rules():
    assert scalars.coerce(Q, 3) == Fraction(3)
    assert scalars.coerce(Q, GaussianRational(2, 0)) == Fraction(2)
    with pytest.raises(ScalarError):
        scalars.coerce(Q, GaussianRational(0, 1))
    assert scalars.coerce(QI, Fraction(1, 2)) == GaussianRational(Fraction(1, 2))


@pytest.mark.parametrize("text,expected", [
    ("3", GaussianRational(3)),
    ("-1/2", GaussianRational(Fraction(-1, 2))),
    ("i", GaussianRational(0, 1)),
    ("-i", GaussianRational(0, -1)),
    ("2i", GaussianRational(0, 2)),
    ("1/2i", GaussianRational(0, Fraction(1, 2))),
    ("1+2i", GaussianRational(1, 2)),
    ("1/2-1/3i", GaussianRational(Fraction(1, 2), Fraction(-1, 3))),
])
def test_parse_scalar_text_qi(text, expected):
    assert scalars.parse_scalar_text(QI, text) == expected


def test_parse_scalar_text_errors():
    with pytest.raises(ScalarError):
        scalars.parse_scalar_text(Q, "i")
    with pytest.raises(ScalarError):
        scalars.parse_scalar_text(Q, "1.5")
    with pytest.raises(ScalarError):
        scalars.parse_scalar_text(QI, "1+i+i")


def test_json_round_trip():
    x = GaussianRational(Fraction(2, 3), Fraction(-1, 7))
    assert scalars.scalar_from_json(QI, scalars.scalar_to_json(QI, x)) == x
    y = Fraction(-5, 9)
    assert scalars.scalar_from_json(Q, scalars.scalar_to_json(Q, y)) == y


def test_str_forms():
    assert str(GaussianRational(0, 1)) == "i"
    assert str(GaussianRational(0, -1)) == "-i"
    assert str(GaussianRational(Fraction(1, 2), Fraction(1, 2))) == "1/2+1/2i"
    assert str(GaussianRational(3, 0)) == "3"
