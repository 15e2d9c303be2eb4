"""Diagram-level operators: inverse, mirror, connected sum, chord deletion.

The polynomial transforms under these as

    f(inverse(d)) = f(d)(1/t) * t^2
    f(mirror(d))  = -f(d)(1/t) * t^2
    f(d)          = -f(mirror(inverse(d)))
    f(a # b)      = f(a) + f(b)   for every choice of splice arcs

Connected sum of virtual knots is not well defined as a knot operation (the
result depends on where the circles are joined); only the polynomial identity
is splice-independent.
"""

from __future__ import annotations

from .gauss import (
    OVER,
    UNDER,
    Endpoint,
    GaussDiagram,
    UnknownChordError,
    check_arc,
)


def inverse(d: GaussDiagram) -> GaussDiagram:
    """Reverse the circle orientation; signs and over/under are unchanged."""
    return GaussDiagram(tuple(reversed(d.endpoints)))


def mirror(d: GaussDiagram) -> GaussDiagram:
    """Switch every crossing: swap over/under and negate every sign."""
    return GaussDiagram(
        Endpoint(c, UNDER if k == OVER else OVER, -s) for c, k, s in d.endpoints
    )


def connected_sum(
    da: GaussDiagram, arc_a: int, db: GaussDiagram, arc_b: int
) -> GaussDiagram:
    """Splice db into da: cut both circles inside the given arcs and join.

    db's endpoint sequence, rotated to start at its cut point and relabelled
    above da's maximum chord id, is inserted into da at arc ``arc_a``.  Both
    circle orientations are preserved.
    """
    check_arc(da, arc_a)
    check_arc(db, arc_b)
    offset = max(da.chords, default=0)
    rotated = db.endpoints[arc_b:] + db.endpoints[:arc_b]
    spliced = tuple(Endpoint(c + offset, k, s) for c, k, s in rotated)
    return GaussDiagram(da.endpoints[:arc_a] + spliced + da.endpoints[arc_a:])


def delete_chord(d: GaussDiagram, c: int) -> GaussDiagram:
    """Remove both endpoints of chord c (turn the crossing virtual).

    Deleting c flips the odd/even parity of exactly the chords that
    interleave c and leaves every other chord untouched.
    """
    if c not in d.chords:
        raise UnknownChordError(f"no chord {c} in diagram")
    return GaussDiagram(e for e in d.endpoints if e.chord != c)
