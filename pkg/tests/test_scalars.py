from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfdihedral.scalars import (I, ONE, ZERO, Scalar, make_qparam, parse_rational,
                                  parse_scalar, rational_sqrt)

fracs = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
scalars = st.builds(Scalar, fracs, fracs)


def test_i_squared():
    assert I * I == -ONE


def test_division_and_conjugation():
    z = Scalar(1, 1)
    assert z / Scalar(1, -1) == I
    assert (z * z.conj()) == Scalar(2)
    assert z.conj().conj() == z


def test_foreign_types_are_rejected():
    with pytest.raises(TypeError):
        ONE + 1.5
    with pytest.raises(TypeError):
        Scalar.coerce(1j)


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).conj() == a.conj() * b.conj()
    if b:
        assert (a / b) * b == a


@given(scalars)
def test_hash_matches_equality(a):
    assert hash(a + ZERO) == hash(a)
    if a.is_real():
        assert hash(a) == hash(a.re)


@pytest.mark.parametrize("text, value", [
    ("3/4", Scalar(Fraction(3, 4))),
    ("-2", Scalar(-2)),
    ("1/2 + 3/4 i", Scalar(Fraction(1, 2), Fraction(3, 4))),
    ("-i", Scalar(0, -1)),
    ("5/3 i", Scalar(0, Fraction(5, 3))),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "1/0", "abc", "1.5"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad) if bad else parse_rational(bad)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(25, 16)) == Fraction(5, 4)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None


def test_qparam_roots():
    qp = make_qparam("3/4", need_root=True)
    assert qp.root == Fraction(5, 4)
    assert qp.root_inv == Fraction(5, 3)


@pytest.mark.parametrize("q", ["0", "1", "-1"])
def test_qparam_rejects_degenerate(q):
    with pytest.raises(ValueError):
        make_qparam(q)


def test_qparam_without_rational_root():
    make_qparam("1/2")
    with pytest.raises(ValueError, match="Pythagorean"):
        make_qparam("1/2", need_root=True)
