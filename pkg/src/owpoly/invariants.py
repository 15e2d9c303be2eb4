"""Crossing invariants of a Gauss diagram.

The pipeline: label every arc of the circle with an integer, derive an index
N(c) for every chord from the labels at its endpoints, call a chord *odd*
when it interleaves an odd number of other chords, and sum ``w(c) * t^N(c)``
over the odd chords.  The result is the odd writhe polynomial f, a virtual
knot invariant whose value at t = +-1 is the odd writhe J.

Arc labels: the label of an arc is the sum of w(c) over every chord whose
over endpoint is met before its under endpoint when traversing the circle
from that arc.  Adjacent labels always differ by exactly 1: crossing an over
endpoint subtracts the chord's sign, crossing an under endpoint adds it.

Chord index: with ``pred(x)`` the label of the arc immediately preceding
endpoint x,

    N(c) = pred(over) - pred(under) + 1 - w(c)

i.e. the pred-arc difference for positive chords and the succ-arc difference
for negative ones.  Among the candidate readings of the four arc labels
around a chord, this is the one that keeps the polynomial invariant under
all Reidemeister moves; it gives N(c) = 1 at every crossing of a classical
(planar-realizable) diagram.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gauss import OVER, GaussDiagram, UnknownChordError
from .laurent import Laurent, format_poly, poly_to_map


def arc_labels(d: GaussDiagram) -> tuple[int, ...]:
    """Label of arc i (the arc immediately preceding endpoint i), for all i.

    Computed by one full traversal for arc 0 and label steps for the rest.
    The empty diagram has no arcs.
    """
    eps = d.endpoints
    if not eps:
        return ()
    base = sum(c.sign for c in d.chords.values() if c.over_pos < c.under_pos)
    labels = [base]
    for chord, kind, sign in eps[:-1]:
        labels.append(labels[-1] + (sign if kind != OVER else -sign))
    return tuple(labels)


def chord_index(d: GaussDiagram, c: int) -> int:
    """The integer index N(c) of one chord."""
    try:
        chord = d.chords[c]
    except KeyError:
        raise UnknownChordError(f"no chord {c} in diagram") from None
    labels = arc_labels(d)
    return labels[chord.over_pos] - labels[chord.under_pos] + 1 - chord.sign


def _chord_indices(d: GaussDiagram, labels: tuple[int, ...]) -> dict[int, int]:
    return {
        cid: labels[ch.over_pos] - labels[ch.under_pos] + 1 - ch.sign
        for cid, ch in d.chords.items()
    }


def interleave_counts(d: GaussDiagram) -> dict[int, int]:
    """For each chord, how many other chords it interleaves.

    A chord with both endpoints strictly inside another chord's span cancels
    out of the count, so the XOR of per-position chord bits over the span
    leaves exactly the interleaved chords set.
    """
    bit = {cid: i for i, cid in enumerate(d.chords)}
    pos_bit = [1 << bit[chord] for chord, _, _ in d.endpoints]
    counts: dict[int, int] = {}
    for cid, ch in d.chords.items():
        lo, hi = sorted((ch.over_pos, ch.under_pos))
        mask = 0
        for p in range(lo + 1, hi):
            mask ^= pos_bit[p]
        counts[cid] = mask.bit_count()
    return counts


def is_odd_chord(d: GaussDiagram, c: int) -> bool:
    """True iff chord c interleaves an odd number of chords (equivalently,
    flanks an odd number of endpoints on each side)."""
    if c not in d.chords:
        raise UnknownChordError(f"no chord {c} in diagram")
    return interleave_counts(d)[c] % 2 == 1


def odd_writhe(d: GaussDiagram) -> int:
    """Sum of writhes over the odd chords; always even."""
    parities = interleave_counts(d)
    return sum(ch.sign for cid, ch in d.chords.items() if parities[cid] % 2 == 1)


def odd_writhe_polynomial(d: GaussDiagram) -> Laurent:
    """The odd writhe polynomial: sum of w(c) * t^N(c) over odd chords."""
    labels = arc_labels(d)
    indices = _chord_indices(d, labels)
    parities = interleave_counts(d)
    return Laurent(
        (indices[cid], ch.sign)
        for cid, ch in d.chords.items()
        if parities[cid] % 2 == 1
    )


def full_writhe_polynomial(d: GaussDiagram) -> tuple[Laurent, Laurent]:
    """The all-crossings sum g = sum w(c) t^N(c) and F = g - w(K) t.

    g alone is only invariant under the second and third moves; subtracting
    writhe times t repairs the first.  F vanishes identically on classical
    knots, where every chord has index 1.
    """
    labels = arc_labels(d)
    indices = _chord_indices(d, labels)
    g = Laurent((indices[cid], ch.sign) for cid, ch in d.chords.items())
    writhe = sum(ch.sign for ch in d.chords.values())
    return g, g + Laurent.monomial(-writhe, 1)


def crossing_lower_bound(f: Laurent, j: int) -> int:
    """Lower bound max(Deg f, |J|) for the real crossing number."""
    return max(f.max_abs_degree(), abs(j))


@dataclass(frozen=True)
class Obstructions:
    """Symmetry obstructions read off the polynomial alone.

    ``noninvertible``: f differs from f(1/t) * t^2, so the knot cannot equal
    its orientation reverse.  ``chiral``: f differs from -f(1/t) * t^2, so
    the knot cannot equal its mirror image.
    """

    noninvertible: bool
    chiral: bool


def symmetry_obstructions(f: Laurent) -> Obstructions:
    flipped = f.substitute_inverse().mul_monomial(1, 2)
    return Obstructions(noninvertible=f != flipped, chiral=f != -flipped)


@dataclass(frozen=True)
class ChordReport:
    chord_id: int
    writhe: int
    index: int
    odd: bool

    def to_dict(self) -> dict:
        return {
            "chord_id": self.chord_id,
            "writhe": self.writhe,
            "index": self.index,
            "odd": self.odd,
        }


@dataclass(frozen=True)
class InvariantReport:
    """Everything this package computes for one diagram."""

    gauss_code: str
    writhe_total: int
    odd_writhe: int
    odd_writhe_poly: Laurent
    full_poly: Laurent
    classical_remainder: Laurent
    degree: int
    crossing_lower_bound: int
    chords: tuple[ChordReport, ...]
    obstructions: Obstructions

    def to_dict(self) -> dict:
        return {
            "gauss_code": self.gauss_code,
            "writhe_total": self.writhe_total,
            "odd_writhe": self.odd_writhe,
            "odd_writhe_poly": poly_to_map(self.odd_writhe_poly),
            "odd_writhe_poly_text": format_poly(self.odd_writhe_poly),
            "full_poly": poly_to_map(self.full_poly),
            "full_poly_text": format_poly(self.full_poly),
            "classical_remainder": poly_to_map(self.classical_remainder),
            "classical_remainder_text": format_poly(self.classical_remainder),
            "degree": self.degree,
            "crossing_lower_bound": self.crossing_lower_bound,
            "chords": [c.to_dict() for c in self.chords],
            "obstructions": {
                "noninvertible": self.obstructions.noninvertible,
                "chiral": self.obstructions.chiral,
            },
        }


def report(d: GaussDiagram) -> InvariantReport:
    """Aggregate report over one diagram; the Gauss code field is canonical."""
    labels = arc_labels(d)
    indices = _chord_indices(d, labels)
    parities = interleave_counts(d)
    chord_rows = tuple(
        ChordReport(cid, ch.sign, indices[cid], parities[cid] % 2 == 1)
        for cid, ch in sorted(d.chords.items())
    )
    f = Laurent((indices[cid], ch.sign)
                for cid, ch in d.chords.items() if parities[cid] % 2 == 1)
    g = Laurent((indices[cid], ch.sign) for cid, ch in d.chords.items())
    writhe = sum(ch.sign for ch in d.chords.values())
    j = f.evaluate(1)
    return InvariantReport(
        gauss_code=d.canonical_code,
        writhe_total=writhe,
        odd_writhe=j,
        odd_writhe_poly=f,
        full_poly=g,
        classical_remainder=g + Laurent.monomial(-writhe, 1),
        degree=f.max_abs_degree(),
        crossing_lower_bound=crossing_lower_bound(f, j),
        chords=chord_rows,
        obstructions=symmetry_obstructions(f),
    )
