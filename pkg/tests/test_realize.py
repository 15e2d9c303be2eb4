"""Building blocks and realization of admissible polynomials."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from owpoly import (
    Laurent,
    OddCoefficientSumError,
    OddExponentError,
    block_l,
    block_m,
    block_n,
    canonicalize,
    inverse,
    mirror,
    odd_writhe,
    odd_writhe_polynomial,
    parse,
    parse_poly,
    plan,
    realize,
    report,
    validate_target,
)
from owpoly.realize import BAR_STAR, PLAIN, RealizationError


@st.composite
def admissible_polys(draw):
    exps = draw(st.lists(st.integers(-5, 5), unique=True, max_size=6))
    terms = {2 * e: draw(st.integers(-5, 5)) for e in exps}
    if sum(terms.values()) % 2 != 0:
        e = 2 * exps[0]
        terms[e] += 1 if terms[e] < 5 else -1
    return Laurent(terms)


# ---------------------------------------------------------------------------
# blocks


def test_block_l_one_is_virtual_trefoil():
    assert canonicalize(block_l(1)) == parse("O1+O2+U1+U2+")
    assert block_m() == block_l(1)


@pytest.mark.parametrize("k", range(1, 7))
def test_block_l_family_polynomials(k):
    base = block_l(k)
    assert base.n == 2 * k
    assert odd_writhe_polynomial(base) == Laurent({2 * k: 1, 0: 2 * k - 1})
    assert odd_writhe_polynomial(inverse(base)) == Laurent(
        {2 - 2 * k: 1, 2: 2 * k - 1}
    )
    assert odd_writhe_polynomial(mirror(base)) == Laurent(
        {2 - 2 * k: -1, 2: -(2 * k - 1)}
    )
    assert odd_writhe_polynomial(mirror(inverse(base))) == Laurent(
        {2 * k: -1, 0: -(2 * k - 1)}
    )


def test_block_l_rejects_nonpositive():
    with pytest.raises(RealizationError):
        block_l(0)


def test_block_n_values():
    d = block_n()
    assert d.n == 3
    assert odd_writhe_polynomial(d) == parse_poly("t^2-1")
    assert odd_writhe(d) == 0


def test_block_n_is_least_canonical_with_its_polynomial():
    # no 2-chord diagram carries t^2 - 1; block N is the least 3-chord one
    from owpoly import BLOCK_N_CODE, enumerate_diagrams

    target = parse_poly("t^2-1")
    assert all(odd_writhe_polynomial(d) != target for d in enumerate_diagrams(2))
    hits = [d.canonical_code for d in enumerate_diagrams(3)
            if odd_writhe_polynomial(d) == target]
    assert BLOCK_N_CODE == min(hits)
    assert parse(BLOCK_N_CODE).canonical_code == BLOCK_N_CODE


def test_block_m_value():
    assert odd_writhe_polynomial(block_m()) == parse_poly("t^2+1")


# ---------------------------------------------------------------------------
# admissibility


def test_validate_target_accepts_example():
    validate_target(parse_poly("t^4-2t^2+1"))
    validate_target(Laurent.zero())


def test_validate_target_rejects_odd_exponent():
    with pytest.raises(OddExponentError):
        validate_target(parse_poly("t^3"))


def test_validate_target_rejects_odd_coefficient_sum():
    with pytest.raises(OddCoefficientSumError):
        validate_target(parse_poly("t^2+t^-2+1"))


def test_odd_exponent_reported_before_sum():
    with pytest.raises(OddExponentError):
        validate_target(parse_poly("t^3+t^2"))  # both conditions fail


# ---------------------------------------------------------------------------
# planning


def test_plan_virtual_trefoil():
    p = plan(parse_poly("t^2+1"))
    assert p.l_blocks == ()
    assert (p.m_count, p.n_count) == (1, 0)


def test_plan_degree_four_example():
    p = plan(parse_poly("t^4-2t^2+1"))
    assert len(p.l_blocks) == 1
    block = p.l_blocks[0]
    assert (block.k, block.count, block.variant) == (2, 1, PLAIN)
    assert p.residual_t0 == 3
    assert (p.m_count, p.n_count) == (-2, 0)


def test_plan_zero_is_empty():
    p = plan(Laurent.zero())
    assert p.l_blocks == () and p.m_count == 0 and p.n_count == 0


def test_plan_negative_leading_coefficient_uses_bar_star():
    p = plan(parse_poly("-t^4-3"))
    assert p.l_blocks[0].variant == BAR_STAR


# ---------------------------------------------------------------------------
# realization


def test_realize_zero_is_unknot():
    assert realize(Laurent.zero()).endpoints == ()


def test_realize_virtual_trefoil():
    assert realize(parse_poly("t^2+1")) == parse("O1+O2+U1+U2+")


def test_realize_degree_four_example():
    d = realize(parse_poly("t^4-2t^2+1"))
    rep = report(d)
    assert d.n == 8
    assert rep.odd_writhe_poly == parse_poly("t^4-2t^2+1")
    assert rep.odd_writhe == 0
    assert rep.crossing_lower_bound == 4


def test_realize_propagates_validation_errors():
    with pytest.raises(OddExponentError):
        realize(parse_poly("t"))
    with pytest.raises(OddCoefficientSumError):
        realize(parse_poly("3t^2"))


def test_realize_negative_exponents():
    f = parse_poly("t^-4-2t^-2+1")
    assert odd_writhe_polynomial(realize(f)) == f


@given(admissible_polys())
@settings(max_examples=60, deadline=None)
def test_realize_roundtrip(f):
    d = realize(f)
    assert odd_writhe_polynomial(d) == f
    p = plan(f)
    assert d.n == (
        sum(2 * b.k * b.count for b in p.l_blocks)
        + 2 * abs(p.m_count)
        + 3 * abs(p.n_count)
    )
