from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorreg.grammar import PolynomialSyntaxError, parse_polynomial
from milnorreg.polyring import (
    GF32003,
    QQ,
    FieldSpec,
    NotBihomogeneous,
    Ring,
    RingMismatch,
    bigraded_ring,
    count_monomials,
    parse_field,
    random_bihomogeneous,
)


def test_parse_and_print(R):
    f = R.parse("x0^3+x1^3+x2^3+x3^3")
    assert str(f) == "x0^3 + x1^3 + x2^3 + x3^3"
    assert f.degree() == 3 and f.is_homogeneous()


def test_product_expanded(R):
    f = R.parse("x3*(x0^2+x1^2+x2^2)")
    assert f == R.parse("x0^2*x3 + x1^2*x3 + x2^2*x3")


def test_implicit_multiplication(R):
    assert R.parse("2x0x1") == R.parse("2*x0*x1")
    assert R.parse("x3(x0+x1)") == R.parse("x0*x3+x1*x3")


def test_syntax_error_offset(R):
    with pytest.raises(PolynomialSyntaxError) as exc:
        parse_polynomial("x0^2 +", R)
    assert exc.value.offset == 6


def test_unknown_variable(R):
    with pytest.raises(PolynomialSyntaxError):
        R.parse("x0 + y")


def test_rational_coefficients():
    S = Ring(2, QQ)
    f = S.parse("1/2*x0 - 3/4*x1")
    assert f.coefficient((1, 0)) == Fraction(1, 2)
    assert (f * 4) == S.parse("2*x0 - 3*x1")


def test_fraction_mod_p():
    S = Ring(2)
    assert S.parse("1/2*x0") * 2 == S.parse("x0")


def test_fields():
    assert parse_field("QQ") is QQ
    assert parse_field("32003") == GF32003
    assert parse_field("GF(7)").characteristic == 7
    with pytest.raises(ValueError):
        FieldSpec(6)


def test_derivative_and_euler(R):
    f = R.parse("x0^2*x1 + 3*x2^3 - x0*x1*x3")
    euler = sum((x * f.derivative(i) for i, x in enumerate(R.gens)), R.zero)
    assert euler == f * 3


def test_divexact(R):
    a = R.parse("x0 + x1")
    b = R.parse("x0^2 - x2*x3")
    assert (a * b).divexact(a) == b
    with pytest.raises(ArithmeticError):
        b.divexact(a)


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        Ring(4).parse("x0") + Ring(4, QQ).parse("x0")


def test_bidegree():
    B = bigraded_ring()
    f = B.parse("x0*x2^3 + x1*x2*x3^2")
    assert f.bidegree() == (1, 3)
    with pytest.raises(NotBihomogeneous):
        B.parse("x0*x2 + x2^2").bidegree()


def test_random_bihomogeneous_dense():
    f = random_bihomogeneous(2, 3, seed=5)
    assert f.bidegree() == (2, 3)
    assert len(f) == 3 * 4
    assert f == random_bihomogeneous(2, 3, seed=5)


def test_count_monomials():
    assert count_monomials(4, 3) == 20
    assert len(Ring(4).monomials_of_degree(3)) == 20


small = st.integers(min_value=-5, max_value=5)
terms = st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3), small, max_size=6)


@settings(max_examples=60, deadline=None)
@given(terms, terms, terms)
def test_ring_axioms(a, b, c):
    S = Ring(3, QQ)
    p, q, r = S.from_dict(a), S.from_dict(b), S.from_dict(c)
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p - p == S.zero


@settings(max_examples=60, deadline=None)
@given(terms)
def test_print_parse_roundtrip(a):
    for S in (Ring(3, QQ), Ring(3)):
        p = S.from_dict(a)
        assert S.parse(str(p)) == p


@settings(max_examples=40, deadline=None)
@given(terms, terms)
def test_leibniz(a, b):
    S = Ring(3, QQ)
    p, q = S.from_dict(a), S.from_dict(b)
    for i in range(3):
        assert (p * q).derivative(i) == p.derivative(i) * q + p * q.derivative(i)
