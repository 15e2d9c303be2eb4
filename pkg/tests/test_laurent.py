"""Laurent polynomial arithmetic, text and map forms."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from owpoly import (
    Laurent,
    PolySyntaxError,
    format_poly,
    parse_poly,
    poly_from_map,
    poly_to_map,
)

laurents = st.dictionaries(st.integers(-8, 8), st.integers(-9, 9),
                           max_size=6).map(Laurent)


def test_add_examples():
    assert parse_poly("t^2+1") + parse_poly("t^2-1") == parse_poly("2t^2")
    assert parse_poly("t^2+1") + parse_poly("t^4+3") == parse_poly("t^4+t^2+4")


def test_additive_inverse():
    p = parse_poly("t^4-2t^2+1")
    assert p + (-p) == Laurent.zero()
    assert not (p - p)


def test_zero_terms_dropped():
    p = Laurent({2: 1, 0: 0, -3: 0})
    assert p.terms() == {2: 1}
    assert Laurent({1: 2, }) + Laurent({1: -2}) == Laurent.zero()


def test_substitute_inverse_examples():
    assert parse_poly("t^2+1").substitute_inverse() == parse_poly("t^-2+1")
    assert Laurent.zero().substitute_inverse() == Laurent.zero()
    assert parse_poly("t^4-2t^2+1").substitute_inverse() == parse_poly("t^-4-2t^-2+1")


def test_mul_monomial_examples():
    assert parse_poly("t^-2+1").mul_monomial(1, 2) == parse_poly("t^2+1")
    p = parse_poly("t^4-2t^2+1")
    assert p.mul_monomial(-1, 0) == -p
    # the inverse of the degree-four example knot
    assert parse_poly("t^-4-2t^-2+1").mul_monomial(1, 2) == parse_poly("t^2-2+t^-2")


def test_evaluate_examples():
    assert parse_poly("t^2+1").evaluate(1) == 2
    assert parse_poly("t^2+1").evaluate(-1) == 2
    assert parse_poly("t^2-1").evaluate(1) == 0


def test_max_abs_degree():
    assert parse_poly("t^4-2t^2+1").max_abs_degree() == 4
    assert parse_poly("t^2-2+t^-2").max_abs_degree() == 2
    assert parse_poly("t^-6+t^2").max_abs_degree() == 6
    assert Laurent.zero().max_abs_degree() == 0


def test_text_form_examples():
    assert format_poly(parse_poly("t^2+1")) == "t^2+1"
    assert parse_poly("t^2+1").terms() == {2: 1, 0: 1}
    assert parse_poly("t^4-2t^2+1").terms() == {4: 1, 2: -2, 0: 1}
    assert parse_poly("0") == Laurent.zero()
    assert format_poly(Laurent.zero()) == "0"
    assert format_poly(Laurent({1: 3})) == "3t"
    assert format_poly(Laurent({-2: 1, 2: 1, 0: -2})) == "t^2-2+t^-2"
    assert format_poly(Laurent({0: -1, 2: -1})) == "-t^2-1"


def test_parse_poly_tolerates_star_and_spaces():
    assert parse_poly("2*t^3 - t + 4") == Laurent({3: 2, 1: -1, 0: 4})
    assert parse_poly("-t^-2") == Laurent({-2: -1})


def test_parse_poly_errors():
    for bad in ("", "t^", "q+1", "1 1", "t^2 4"):
        with pytest.raises(PolySyntaxError):
            parse_poly(bad)


def test_map_form_roundtrip():
    p = parse_poly("t^4-2t^2+1")
    assert poly_to_map(p) == {"4": 1, "2": -2, "0": 1}
    assert poly_from_map(poly_to_map(p)) == p
    assert poly_to_map(Laurent.zero()) == {}


@given(laurents, laurents)
@settings(max_examples=100)
def test_addition_commutes(p, q):
    assert p + q == q + p


@given(laurents, laurents, laurents)
@settings(max_examples=100)
def test_addition_associates(p, q, r):
    assert (p + q) + r == p + (q + r)


@given(laurents, laurents, st.integers(-5, 5), st.integers(-4, 4))
@settings(max_examples=100)
def test_monomial_multiplication_distributes(p, q, coeff, exp):
    assert (p + q).mul_monomial(coeff, exp) == (
        p.mul_monomial(coeff, exp) + q.mul_monomial(coeff, exp)
    )


@given(laurents)
@settings(max_examples=100)
def test_substitute_inverse_is_involution(p):
    assert p.substitute_inverse().substitute_inverse() == p


@given(laurents)
@settings(max_examples=100)
def test_evaluate_at_one_is_coefficient_sum(p):
    assert p.evaluate(1) == sum(p.terms().values())
    assert p.evaluate(-1) == sum(c * (-1) ** e for e, c in p.terms().items())


@given(laurents)
@settings(max_examples=100)
def test_text_roundtrip(p):
    assert parse_poly(format_poly(p)) == p
