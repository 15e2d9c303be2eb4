"""Gauss diagrams of virtual knots and their signed Gauss codes.

A Gauss diagram is a circle with n signed, oriented chords: each chord joins
the two visits of one classical crossing, oriented from the over-passage to
the under-passage, and signed by the crossing's writhe.  Virtual crossings
are never recorded; they are artifacts of planar drawings that leave the
Gauss diagram untouched.

The text form is the signed Gauss code: tokens ``O3+`` / ``U3-`` read around
the circle (left to right in the string), where ``O``/``U`` mark the over and
under visit of a crossing label and the writhe sign is appended to both
tokens of that label.  The stored endpoint sequence has a distinguished start
position purely as a representation artifact; all diagram semantics, plus
``==`` and hashing, are invariant under rotation and relabelling.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, NamedTuple

OVER = "O"
UNDER = "U"


class GaussCodeError(ValueError):
    """Malformed Gauss code or invalid diagram data."""


class GaussSyntaxError(GaussCodeError):
    """Input text does not match the Gauss-code grammar."""


class UnmatchedLabelError(GaussCodeError):
    """A crossing label does not occur exactly once as O and once as U."""


class SignMismatchError(GaussCodeError):
    """The two tokens of one crossing label carry different signs."""


class UnknownChordError(GaussCodeError):
    """A chord id that is not present in the diagram."""


class InvalidArcError(GaussCodeError):
    """An arc index outside the diagram's arc range."""


class Endpoint(NamedTuple):
    """One chord endpoint on the circle."""

    chord: int
    kind: str  # OVER or UNDER
    sign: int  # +1 or -1, shared by both endpoints of the chord


class Chord(NamedTuple):
    """One classical crossing: writhe sign plus its two endpoint positions."""

    id: int
    sign: int
    over_pos: int
    under_pos: int


_TOKEN = re.compile(r"([OU])([0-9]+)([+-])")


class GaussDiagram:
    """Immutable Gauss diagram of a virtual knot.

    ``endpoints`` is the cyclic sequence of 2n chord endpoints; ``chords``
    maps chord id to its :class:`Chord`, in order of first occurrence.  Arc
    ``i`` is the circle segment immediately preceding endpoint ``i``, so a
    diagram with n >= 1 chords has arcs ``0 .. 2n-1``.

    Instances are value objects: never mutate ``endpoints``.  Equality and
    hashing compare canonical codes, so two diagrams are equal exactly when
    they agree up to rotation and relabelling.
    """

    __slots__ = ("endpoints", "chords", "_canonical")

    def __init__(self, endpoints: Iterable[Endpoint] = ()):
        eps = tuple(Endpoint(*e) for e in endpoints)
        self.endpoints = eps
        self.chords = _chord_table(eps)
        self._canonical: str | None = None

    @property
    def n(self) -> int:
        """Number of chords (classical crossings)."""
        return len(self.chords)

    @property
    def arc_count(self) -> int:
        return len(self.endpoints)

    @property
    def canonical_code(self) -> str:
        """Lexicographically least serialization over all rotations."""
        if self._canonical is None:
            self._canonical = _canonical_code(self.endpoints)
        return self._canonical

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self.canonical_code == other.canonical_code

    def __hash__(self) -> int:
        return hash(self.canonical_code)

    def __repr__(self) -> str:
        return f"GaussDiagram({serialize(self)!r})"


def _chord_table(eps: tuple[Endpoint, ...]) -> dict[int, Chord]:
    seen: dict[int, dict[str, int]] = {}
    for pos, (chord, kind, sign) in enumerate(eps):
        if kind not in (OVER, UNDER):
            raise GaussCodeError(f"endpoint kind must be 'O' or 'U', got {kind!r}")
        if sign not in (1, -1):
            raise GaussCodeError(f"writhe sign must be +1 or -1, got {sign!r}")
        rec = seen.setdefault(chord, {})
        if kind in rec:
            raise UnmatchedLabelError(f"label {chord} occurs twice as {kind}")
        rec[kind] = pos
        if "sign" in rec and rec["sign"] != sign:
            raise SignMismatchError(f"label {chord} carries both signs")
        rec["sign"] = sign
    table: dict[int, Chord] = {}
    for chord, rec in seen.items():
        if OVER not in rec or UNDER not in rec:
            raise UnmatchedLabelError(
                f"label {chord} must occur exactly once as O and once as U"
            )
        table[chord] = Chord(chord, rec["sign"], rec[OVER], rec[UNDER])
    return table


def parse(text: str) -> GaussDiagram:
    """Parse a signed Gauss code into a validated diagram.

    Whitespace between tokens is ignored.  Chord ids are renumbered 1..n in
    order of first occurrence.  The empty string parses to the unknot.
    """
    eps: list[Endpoint] = []
    relabel: dict[int, int] = {}
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise GaussSyntaxError(f"bad token at position {pos}: {text[pos:pos+8]!r}")
        kind, label, sign = m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1
        chord = relabel.setdefault(label, len(relabel) + 1)
        eps.append(Endpoint(chord, kind, sign))
        pos = m.end()
    return GaussDiagram(eps)


def serialize(d: GaussDiagram) -> str:
    """Render the diagram as a signed Gauss code, one token per endpoint."""
    return "".join(
        f"{kind}{chord}{'+' if sign > 0 else '-'}" for chord, kind, sign in d.endpoints
    )


def _canonical_code(eps: tuple[Endpoint, ...]) -> str:
    if not eps:
        return ""
    best: str | None = None
    for start in range(len(eps)):
        relabel: dict[int, int] = {}
        parts = []
        for k in range(len(eps)):
            chord, kind, sign = eps[(start + k) % len(eps)]
            label = relabel.setdefault(chord, len(relabel) + 1)
            parts.append(f"{kind}{label}{'+' if sign > 0 else '-'}")
        code = "".join(parts)
        if best is None or code < best:
            best = code
    return best


def canonicalize(d: GaussDiagram) -> GaussDiagram:
    """Canonical representative of the rotation/relabelling class.

    Idempotent; two diagrams are equal as diagrams iff their canonical forms
    serialize identically.
    """
    return parse(d.canonical_code)


def check_arc(d: GaussDiagram, arc: int) -> None:
    """Validate an arc index; the unknot has a single virtual arc 0."""
    limit = d.arc_count if d.n else 1
    if not 0 <= arc < limit:
        raise InvalidArcError(f"arc {arc} out of range for a {d.n}-chord diagram")


def interleaves(d: GaussDiagram, c: int, e: int) -> bool:
    """True iff exactly one endpoint of chord e lies strictly between the
    endpoints of chord c on the circle."""
    if c == e:
        raise UnknownChordError(f"chords must be distinct, got {c} twice")
    try:
        cc, ce = d.chords[c], d.chords[e]
    except KeyError as exc:
        raise UnknownChordError(f"no chord {exc.args[0]} in diagram") from None
    lo, hi = sorted((cc.over_pos, cc.under_pos))
    return (lo < ce.over_pos < hi) != (lo < ce.under_pos < hi)


def _pairings(slots: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not slots:
        yield []
        return
    first = slots[0]
    for i in range(1, len(slots)):
        rest = slots[1:i] + slots[i + 1 :]
        for sub in _pairings(rest):
            yield [(first, slots[i])] + sub


def enumerate_diagrams(n: int) -> Iterator[GaussDiagram]:
    """Yield every n-chord diagram once, up to rotation and relabelling.

    Covers all endpoint pairings, over/under assignments and sign choices;
    output is sorted by canonical code.  Exponential in n (practical for
    n <= 5).
    """
    if n < 0:
        raise ValueError("chord count must be nonnegative")
    if n == 0:
        yield GaussDiagram(())
        return
    codes: set[str] = set()
    for pairing in _pairings(list(range(2 * n))):
        for kinds in itertools.product((OVER, UNDER), repeat=n):
            for signs in itertools.product((1, -1), repeat=n):
                eps: list[Endpoint | None] = [None] * (2 * n)
                for cid, ((a, b), kind, sign) in enumerate(
                    zip(pairing, kinds, signs), start=1
                ):
                    other = UNDER if kind == OVER else OVER
                    eps[a] = Endpoint(cid, kind, sign)
                    eps[b] = Endpoint(cid, other, sign)
                codes.add(_canonical_code(tuple(eps)))
    for code in sorted(codes):
        yield parse(code)
