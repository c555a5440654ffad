from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lfact.poly import ExactPoly, format_rational

t = ExactPoly.t()

exps = st.fractions(min_value=-3, max_value=6, max_denominator=3)
polys = st.dictionaries(exps, st.integers(-20, 20), max_size=5).map(ExactPoly)


def test_zero_coefficients_dropped():
    p = ExactPoly({1: 2, 0: 0, 3: 0})
    assert p.terms == {Fraction(1): 2}
    assert (t - t).is_zero()


def test_str_descending():
    assert str((t - 1) ** 3) == "1 * t^3 - 3 * t^2 + 3 * t - 1"
    assert str(ExactPoly.monomial(-2, Fraction(1, 2))) == "-2 * t^(1/2)"


def test_linear_product():
    assert ExactPoly.linear_product([1, 2, 3]) == ExactPoly.from_coeffs([-6, 11, -6, 1])
    assert ExactPoly.linear_product([]) == ExactPoly.const(1)


def test_evaluate():
    p = (t - 1) ** 2 * (t - 3)
    assert p.evaluate(0) == -3
    assert p.evaluate(3) == 0
    half = ExactPoly.monomial(5, Fraction(1, 2)) + 1
    assert half.evaluate(1) == 6
    assert half.evaluate(0) == 1
    with pytest.raises(ValueError):
        half.evaluate(2)


def test_shift_and_coefficients():
    assert (t + 1).shift(2) == ExactPoly.from_coeffs([0, 0, 1, 1])
    assert ExactPoly.from_coeffs([1, 0, 2]).coefficients() == [1, 0, 2]
    with pytest.raises(ValueError):
        ExactPoly.monomial(1, Fraction(1, 2)).coefficients()


def test_integer_coefficients_only():
    with pytest.raises(TypeError):
        ExactPoly({1: 0.5})


def test_format_rational():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-1, 2)) == "-1/2"


@given(polys)
def test_json_roundtrip(p):
    assert ExactPoly.from_json(p.to_json()) == p
    exps_out = [Fraction(e) for e, _ in p.to_json()]
    assert exps_out == sorted(exps_out, reverse=True)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ExactPoly()
    assert a * 1 == a


@given(polys, polys, st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, b, v):
    if not (a.has_integer_exponents() and b.has_integer_exponents()):
        return
    if v == 0 and any(e < 0 for e in list(a.terms) + list(b.terms)):
        return
    assert (a * b).evaluate(v) == a.evaluate(v) * b.evaluate(v)
    assert (a + b).evaluate(v) == a.evaluate(v) + b.evaluate(v)


def test_hash_consistent():
    assert hash(ExactPoly({2: 1, 0: -1})) == hash((t - 1) * (t + 1))
