"""Arc labels, chord indices, parity, odd writhe, and the polynomial."""

import pytest
from hypothesis import given, settings

from owpoly import (
    Endpoint,
    GaussDiagram,
    Laurent,
    UnknownChordError,
    arc_labels,
    block_n,
    chord_index,
    crossing_lower_bound,
    delete_chord,
    enumerate_diagrams,
    full_writhe_polynomial,
    interleaves,
    is_odd_chord,
    odd_writhe,
    odd_writhe_polynomial,
    parse,
    parse_poly,
    report,
    symmetry_obstructions,
)

from test_gauss import diagrams

VT = parse("O1+O2+U1+U2+")
CLASSICAL_TREFOIL = parse("O1+U2+O3+U1+O2+U3+")
FIGURE_EIGHT = parse("O1+U2-O4-U1+O3+U4-O2-U3+")


# ---------------------------------------------------------------------------
# independent oracles


def oracle_arc_labels(d):
    """Literal definition: one full traversal per arc."""
    eps = d.endpoints
    n2 = len(eps)
    labels = []
    for start in range(n2):
        total = 0
        for ch in d.chords.values():
            if (ch.over_pos - start) % n2 < (ch.under_pos - start) % n2:
                total += ch.sign
        labels.append(total)
    return tuple(labels)


def oracle_is_odd(d, cid):
    """Odd number of endpoints strictly between the chord's ends."""
    ch = d.chords[cid]
    lo, hi = sorted((ch.over_pos, ch.under_pos))
    return (hi - lo - 1) % 2 == 1


# ---------------------------------------------------------------------------
# arc labels


def test_arc_labels_virtual_trefoil():
    assert arc_labels(VT) == (2, 1, 0, 1)
    assert arc_labels(VT) == oracle_arc_labels(VT)


def test_arc_labels_empty():
    assert arc_labels(parse("")) == ()


@pytest.mark.parametrize("code", ["O1+U1+", "U1+O1+", "O1-U1-", "U1-O1-"])
def test_arc_labels_one_chord(code):
    labels = arc_labels(parse(code))
    assert len(labels) == 2
    assert abs(labels[0] - labels[1]) == 1


@given(diagrams())
@settings(max_examples=100)
def test_arc_labels_match_literal_definition(d):
    assert arc_labels(d) == oracle_arc_labels(d)


@given(diagrams(min_chords=1))
@settings(max_examples=100)
def test_adjacent_labels_step_by_chord_sign(d):
    labels = arc_labels(d)
    n2 = len(labels)
    for pos, (chord, kind, sign) in enumerate(d.endpoints):
        step = labels[(pos + 1) % n2] - labels[pos]
        assert step == (-sign if kind == "O" else sign)


# ---------------------------------------------------------------------------
# chord index and parity


def test_chord_index_virtual_trefoil():
    assert chord_index(VT, 1) == 2
    assert chord_index(VT, 2) == 0


def test_chord_index_block_n_matches_printed_contributions():
    # the positive odd chord contributes +t^2, the negative odd chord -t^0
    d = block_n()
    rows = {r.chord_id: r for r in report(d).chords}
    odd_rows = [r for r in rows.values() if r.odd]
    assert sorted((r.writhe, r.index) for r in odd_rows) == [(-1, 0), (1, 2)]


@pytest.mark.parametrize("kink", ["O9+U9+", "U9+O9+", "O9-U9-", "U9-O9-"])
@pytest.mark.parametrize("host", ["", "O1+O2+U1+U2+", "O1+U2+O3+U1+O2+U3+"])
def test_isolated_kink_has_index_one(host, kink):
    h = parse(host)
    kink_id = max(h.chords, default=0) + 1
    kink_eps = tuple(
        Endpoint(kink_id, e.kind, e.sign) for e in parse(kink).endpoints
    )
    for cut in range(max(1, 2 * h.n)):
        d = GaussDiagram(h.endpoints[:cut] + kink_eps + h.endpoints[cut:])
        assert chord_index(d, kink_id) == 1
        assert not is_odd_chord(d, kink_id)


def test_chord_index_unknown_chord():
    with pytest.raises(UnknownChordError):
        chord_index(VT, 5)
    with pytest.raises(UnknownChordError):
        is_odd_chord(VT, 5)


def test_is_odd_virtual_trefoil():
    assert is_odd_chord(VT, 1) and is_odd_chord(VT, 2)


def test_is_odd_classical_trefoil_all_even():
    for cid in (1, 2, 3):
        assert not is_odd_chord(CLASSICAL_TREFOIL, cid)


@given(diagrams(min_chords=1))
@settings(max_examples=100)
def test_parity_matches_side_count_oracle(d):
    for cid in d.chords:
        assert is_odd_chord(d, cid) == oracle_is_odd(d, cid)


# ---------------------------------------------------------------------------
# odd writhe and polynomials


def test_odd_writhe_examples():
    assert odd_writhe(VT) == 2
    assert odd_writhe(block_n()) == 0
    assert odd_writhe(parse("")) == 0


def test_odd_writhe_polynomial_examples():
    assert odd_writhe_polynomial(VT) == parse_poly("t^2+1")
    assert odd_writhe_polynomial(block_n()) == parse_poly("t^2-1")
    assert odd_writhe_polynomial(CLASSICAL_TREFOIL) == Laurent.zero()
    assert odd_writhe_polynomial(parse("")) == Laurent.zero()


def test_full_writhe_polynomial_classical_trefoil():
    g, remainder = full_writhe_polynomial(CLASSICAL_TREFOIL)
    assert g == parse_poly("3t")
    assert remainder == Laurent.zero()


def test_full_writhe_polynomial_virtual_trefoil():
    g, remainder = full_writhe_polynomial(VT)
    assert g == parse_poly("t^2+1")
    assert remainder == parse_poly("t^2-2t+1")


def test_full_writhe_polynomial_empty():
    assert full_writhe_polynomial(parse("")) == (Laurent.zero(), Laurent.zero())


def test_figure_eight_is_classically_trivial():
    rows = report(FIGURE_EIGHT).chords
    assert all(not r.odd for r in rows)
    assert all(r.index == 1 for r in rows)
    g, remainder = full_writhe_polynomial(FIGURE_EIGHT)
    assert remainder == Laurent.zero()
    assert odd_writhe_polynomial(FIGURE_EIGHT) == Laurent.zero()


def test_crossing_lower_bound_examples():
    assert crossing_lower_bound(parse_poly("t^4-2t^2+1"), 0) == 4
    assert crossing_lower_bound(parse_poly("t^2+1"), 2) == 2
    assert crossing_lower_bound(Laurent.zero(), 0) == 0


def test_symmetry_obstructions_examples():
    both = symmetry_obstructions(parse_poly("t^4-2t^2+1"))
    assert both.noninvertible and both.chiral
    vt = symmetry_obstructions(parse_poly("t^2+1"))
    assert not vt.noninvertible and vt.chiral
    zero = symmetry_obstructions(Laurent.zero())
    assert not zero.noninvertible and not zero.chiral


# ---------------------------------------------------------------------------
# report aggregation


def test_report_virtual_trefoil():
    rep = report(VT)
    assert rep.gauss_code == "O1+O2+U1+U2+"
    assert rep.odd_writhe == 2
    assert rep.odd_writhe_poly == parse_poly("t^2+1")
    assert rep.degree == 2
    assert rep.crossing_lower_bound == 2
    assert rep.writhe_total == 2
    data = rep.to_dict()
    assert data["odd_writhe_poly"] == {"2": 1, "0": 1}
    assert data["odd_writhe_poly_text"] == "t^2+1"
    assert data["obstructions"] == {"noninvertible": False, "chiral": True}


def test_report_empty():
    rep = report(parse(""))
    assert rep.writhe_total == 0
    assert rep.odd_writhe == 0
    assert rep.odd_writhe_poly == Laurent.zero()
    assert rep.full_poly == Laurent.zero()
    assert rep.classical_remainder == Laurent.zero()
    assert rep.degree == 0
    assert rep.crossing_lower_bound == 0
    assert rep.chords == ()


def test_report_classical_trefoil():
    rep = report(CLASSICAL_TREFOIL)
    assert rep.odd_writhe == 0
    assert rep.odd_writhe_poly == Laurent.zero()
    assert rep.classical_remainder == Laurent.zero()
    assert rep.writhe_total == 3


def test_report_consistency_small():
    for n in range(3):
        for d in enumerate_diagrams(n):
            rep = report(d)
            assert rep.odd_writhe % 2 == 0
            assert rep.odd_writhe_poly.evaluate(1) == rep.odd_writhe
            assert rep.crossing_lower_bound <= d.n


# ---------------------------------------------------------------------------
# randomized invariants


@given(diagrams())
@settings(max_examples=150)
def test_odd_writhe_always_even(d):
    assert odd_writhe(d) % 2 == 0


@given(diagrams())
@settings(max_examples=150)
def test_polynomial_structure(d):
    f = odd_writhe_polynomial(d)
    j = odd_writhe(d)
    assert f.evaluate(1) == j
    assert f.evaluate(-1) == j
    assert all(e % 2 == 0 for e in f.exponents())
    assert f.max_abs_degree() <= d.n
    for row in report(d).chords:
        if row.odd:
            assert row.index % 2 == 0


@given(diagrams(min_chords=1))
@settings(max_examples=100)
def test_chord_deletion_flips_exactly_interleaved_parities(d):
    for cid in list(d.chords):
        before = {c: is_odd_chord(d, c) for c in d.chords if c != cid}
        smaller = delete_chord(d, cid)
        for other, was_odd in before.items():
            flipped = is_odd_chord(smaller, other) != was_odd
            assert flipped == interleaves(d, cid, other)
