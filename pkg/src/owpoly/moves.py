"""Reidemeister move engine on Gauss diagrams.

Virtual Reidemeister moves act trivially on Gauss diagrams, so the engine
only implements the classical moves, in their general abstract form:

* R1: insert or delete a kink chord, i.e. one chord whose endpoints are
  adjacent on the circle, with either sign and either endpoint order.
* R2: insert or delete a pair of chords with opposite signs whose over
  endpoints are adjacent and whose under endpoints are adjacent; the pair
  may be nested (non-interleaved) or interleaved, in any two arcs.
* R3: simultaneously swap two adjacent endpoints at each of three sites
  that pairwise cover three chords (the three strands of a triangle, each
  strand carrying one endpoint of each of its two crossings).

An R3 site triple is accepted only when the over/under relation among the
three strands is acyclic (some strand crosses over both others; a cyclic
triangle admits no slide) and the endpoint orders at the three sites are
compatible with the crossing signs:

    x_B = x_A * s(AC) * s(BC)        x_C = x_A * s(AB) * s(BC)

where A is the strand over both others, B the middle strand, C the bottom
one, s(XY) the sign of the crossing of strands X and Y, and x_A, x_B, x_C
record which chord's endpoint comes first at each site (+1 when AB's does,
taking AC's endpoint as the reference at site C).  These two equations are
exactly the condition that every involved chord keeps its index, so they
characterise the slides realisable on knot diagrams.  Order-incompatible or
cyclic triples are rejected as inapplicable.

Every accepted move preserves the odd writhe polynomial.  As a defensive
guard, applying an R3 re-checks that each involved chord keeps its
(sign, index, parity) triple and raises :class:`MoveGuardError` otherwise;
that error signals an engine bug, never an expected outcome.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .gauss import OVER, UNDER, Endpoint, GaussDiagram, check_arc
from .invariants import arc_labels, interleave_counts

R1_INSERT = "R1_INSERT"
R1_DELETE = "R1_DELETE"
R2_INSERT = "R2_INSERT"
R2_DELETE = "R2_DELETE"
R3 = "R3"


class InapplicableMoveError(ValueError):
    """The move descriptor does not match the diagram."""


class MoveGuardError(RuntimeError):
    """An applied R3 changed some chord's (sign, index, parity) triple."""


@dataclass(frozen=True)
class Move:
    """One applicable Reidemeister move.

    ``arcs`` holds insertion arcs (one for R1, over-arc and under-arc for
    R2); ``chords`` the chords removed or involved; ``sites`` the three
    adjacent position pairs of an R3.  ``sign`` is the inserted kink sign
    for R1 and the first inserted chord's sign for R2 (its partner gets the
    opposite sign).  ``nested`` selects the non-interleaved R2 arrangement.
    """

    kind: str
    arcs: tuple[int, ...] = ()
    chords: tuple[int, ...] = ()
    sign: int = 0
    over_first: bool = True
    nested: bool = True
    sites: tuple[tuple[int, int], ...] = ()

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind in (R1_INSERT, R2_INSERT):
            out["arcs"] = list(self.arcs)
            out["sign"] = self.sign
            if self.kind == R1_INSERT:
                out["over_first"] = self.over_first
            else:
                out["nested"] = self.nested
        if self.chords:
            out["chords"] = list(self.chords)
        if self.sites:
            out["sites"] = [list(s) for s in self.sites]
        return out


def _adjacent(d: GaussDiagram, p: int, q: int) -> bool:
    return (p + 1) % len(d.endpoints) == q


def _r1_delete_moves(d: GaussDiagram) -> list[Move]:
    moves = []
    for cid, ch in d.chords.items():
        if _adjacent(d, ch.over_pos, ch.under_pos) or _adjacent(
            d, ch.under_pos, ch.over_pos
        ):
            moves.append(Move(kind=R1_DELETE, chords=(cid,)))
    return moves


def _r2_delete_moves(d: GaussDiagram) -> list[Move]:
    eps = d.endpoints
    moves = []
    for p in range(len(eps)):
        q = (p + 1) % len(eps)
        m, n = eps[p], eps[q]
        if m.kind != OVER or n.kind != OVER or m.chord == n.chord:
            continue
        if m.sign != -n.sign:
            continue
        mu = d.chords[m.chord].under_pos
        nu = d.chords[n.chord].under_pos
        if _adjacent(d, mu, nu):
            nested = False  # unders in the same order as overs: interleaved pair
        elif _adjacent(d, nu, mu):
            nested = True
        else:
            continue
        moves.append(
            Move(kind=R2_DELETE, chords=(m.chord, n.chord), sign=m.sign, nested=nested)
        )
    return moves


def _r3_strands(
    d: GaussDiagram, sites: tuple[tuple[int, int], ...]
) -> tuple[tuple[int, int, int], tuple[int, int, int]] | None:
    """Classify an R3 site triple; None when it is not a valid slide.

    Returns ((ab, ac, bc), (x_a, x_b, x_c)) on success: the three chords
    named by the strand pairs they cross, and the endpoint-order bits.
    """
    eps = d.endpoints
    over_count = {s: sum(1 for p in s if eps[p].kind == OVER) for s in sites}
    by_count: dict[int, tuple[int, int]] = {}
    for s, cnt in over_count.items():
        if cnt in by_count:
            return None  # cyclic over/under relation
        by_count[cnt] = s
    if sorted(by_count) != [0, 1, 2]:
        return None
    s_a, s_b, s_c = by_count[2], by_count[1], by_count[0]

    def chords_at(site: tuple[int, int]) -> set[int]:
        return {eps[site[0]].chord, eps[site[1]].chord}

    ab_set = chords_at(s_a) & chords_at(s_b)
    ac_set = chords_at(s_a) & chords_at(s_c)
    bc_set = chords_at(s_b) & chords_at(s_c)
    if not (len(ab_set) == len(ac_set) == len(bc_set) == 1):
        return None
    ab, ac, bc = ab_set.pop(), ac_set.pop(), bc_set.pop()
    x_a = 1 if eps[s_a[0]].chord == ab else -1
    x_b = 1 if eps[s_b[0]].chord == ab else -1
    x_c = 1 if eps[s_c[0]].chord == ac else -1
    sgn = {cid: d.chords[cid].sign for cid in (ab, ac, bc)}
    if x_b != x_a * sgn[ac] * sgn[bc] or x_c != x_a * sgn[ab] * sgn[bc]:
        return None
    return (ab, ac, bc), (x_a, x_b, x_c)


def _r3_moves(d: GaussDiagram) -> Iterator[Move]:
    eps = d.endpoints
    n2 = len(eps)
    if d.n < 3:
        return
    sites = []
    for p in range(n2):
        q = (p + 1) % n2
        if eps[p].chord != eps[q].chord:
            sites.append((p, q))
    by_pair: dict[frozenset[int], list[tuple[int, int]]] = {}
    for s in sites:
        by_pair.setdefault(frozenset((eps[s[0]].chord, eps[s[1]].chord)), []).append(s)
    adj: dict[int, set[int]] = {}
    for pair in by_pair:
        a, b = sorted(pair)
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    for x in sorted(adj):
        for y in sorted(c for c in adj[x] if c > x):
            for z in sorted(c for c in adj[x] & adj[y] if c > y):
                for s1 in by_pair[frozenset((x, y))]:
                    for s2 in by_pair[frozenset((x, z))]:
                        for s3 in by_pair[frozenset((y, z))]:
                            trio = (s1, s2, s3)
                            if len({p for s in trio for p in s}) != 6:
                                continue
                            if _r3_strands(d, trio) is None:
                                continue
                            yield Move(
                                kind=R3,
                                chords=(x, y, z),
                                sites=tuple(sorted(trio)),
                            )


def _insert_moves(d: GaussDiagram) -> list[Move]:
    arcs = range(max(1, d.arc_count))
    moves = [
        Move(kind=R1_INSERT, arcs=(arc,), sign=sign, over_first=over_first)
        for arc in arcs
        for sign in (1, -1)
        for over_first in (True, False)
    ]
    moves.extend(
        Move(kind=R2_INSERT, arcs=(i, j), sign=sign, nested=nested)
        for i in arcs
        for j in arcs
        for sign in (1, -1)
        for nested in (True, False)
    )
    return moves


def applicable_moves(d: GaussDiagram) -> list[Move]:
    """Every applicable move: structural deletes, valid R3 swaps, and all
    insert descriptors parameterised over arcs and decorations."""
    moves = _r1_delete_moves(d)
    moves += _r2_delete_moves(d)
    moves += list(_r3_moves(d))
    moves += _insert_moves(d)
    return moves


def _fresh_ids(d: GaussDiagram, count: int) -> list[int]:
    top = max(d.chords, default=0)
    return [top + k for k in range(1, count + 1)]


def _insert_blocks(
    d: GaussDiagram,
    first: tuple[int, list[Endpoint]],
    second: tuple[int, list[Endpoint]],
) -> GaussDiagram:
    (i, block_i), (j, block_j) = first, second
    eps = d.endpoints
    if i <= j:
        merged = eps[:i] + tuple(block_i) + eps[i:j] + tuple(block_j) + eps[j:]
    else:
        merged = eps[:j] + tuple(block_j) + eps[j:i] + tuple(block_i) + eps[i:]
    return GaussDiagram(merged)


def apply_move(d: GaussDiagram, move: Move) -> GaussDiagram:
    """Apply one move; raises :class:`InapplicableMoveError` on mismatch."""
    if move.kind == R1_INSERT:
        (arc,) = move.arcs
        check_arc(d, arc)
        if move.sign not in (1, -1):
            raise InapplicableMoveError("kink sign must be +1 or -1")
        (cid,) = _fresh_ids(d, 1)
        kink = [Endpoint(cid, OVER, move.sign), Endpoint(cid, UNDER, move.sign)]
        if not move.over_first:
            kink.reverse()
        return GaussDiagram(d.endpoints[:arc] + tuple(kink) + d.endpoints[arc:])

    if move.kind == R1_DELETE:
        (cid,) = move.chords
        if cid not in d.chords:
            raise InapplicableMoveError(f"no chord {cid}")
        ch = d.chords[cid]
        if not (
            _adjacent(d, ch.over_pos, ch.under_pos)
            or _adjacent(d, ch.under_pos, ch.over_pos)
        ):
            raise InapplicableMoveError(f"chord {cid} is not a kink")
        return GaussDiagram(e for e in d.endpoints if e.chord != cid)

    if move.kind == R2_INSERT:
        i, j = move.arcs
        check_arc(d, i)
        check_arc(d, j)
        if move.sign not in (1, -1):
            raise InapplicableMoveError("chord sign must be +1 or -1")
        m, n = _fresh_ids(d, 2)
        s = move.sign
        overs = [Endpoint(m, OVER, s), Endpoint(n, OVER, -s)]
        if move.nested:
            unders = [Endpoint(n, UNDER, -s), Endpoint(m, UNDER, s)]
        else:
            unders = [Endpoint(m, UNDER, s), Endpoint(n, UNDER, -s)]
        return _insert_blocks(d, (i, overs), (j, unders))

    if move.kind == R2_DELETE:
        m, n = move.chords
        if m not in d.chords or n not in d.chords:
            raise InapplicableMoveError(f"missing chord in pair {move.chords}")
        cm, cn = d.chords[m], d.chords[n]
        if cm.sign != -cn.sign:
            raise InapplicableMoveError("pair signs must be opposite")
        overs_adjacent = _adjacent(d, cm.over_pos, cn.over_pos) or _adjacent(
            d, cn.over_pos, cm.over_pos
        )
        unders_adjacent = _adjacent(d, cm.under_pos, cn.under_pos) or _adjacent(
            d, cn.under_pos, cm.under_pos
        )
        if not (overs_adjacent and unders_adjacent):
            raise InapplicableMoveError("pair endpoints are not block-adjacent")
        return GaussDiagram(e for e in d.endpoints if e.chord not in (m, n))

    if move.kind == R3:
        return _apply_r3(d, move)

    raise InapplicableMoveError(f"unknown move kind {move.kind!r}")


def _apply_r3(d: GaussDiagram, move: Move) -> GaussDiagram:
    eps = d.endpoints
    n2 = len(eps)
    sites = move.sites
    if len(sites) != 3 or len({p for s in sites for p in s}) != 6:
        raise InapplicableMoveError("R3 needs three disjoint sites")
    for p, q in sites:
        if q != (p + 1) % n2:
            raise InapplicableMoveError(f"site {(p, q)} is not an adjacent pair")
        if eps[p].chord == eps[q].chord:
            raise InapplicableMoveError("site endpoints must belong to two chords")
    pairs = [frozenset((eps[p].chord, eps[q].chord)) for p, q in sites]
    if len(set(pairs)) != 3 or len(set().union(*pairs)) != 3:
        raise InapplicableMoveError("sites must pairwise cover three chords")
    if _r3_strands(d, sites) is None:
        raise InapplicableMoveError("cyclic or order-incompatible triangle")

    before = _chord_triples(d, set().union(*pairs))
    swapped = list(eps)
    for p, q in sites:
        swapped[p], swapped[q] = swapped[q], swapped[p]
    out = GaussDiagram(swapped)
    if _chord_triples(out, set().union(*pairs)) != before:
        raise MoveGuardError(
            f"R3 at {sites} changed a chord's (sign, index, parity) triple"
        )
    return out


def _chord_triples(d: GaussDiagram, chords: set[int]) -> dict[int, tuple]:
    labels = arc_labels(d)
    parities = interleave_counts(d)
    out = {}
    for cid in chords:
        ch = d.chords[cid]
        index = labels[ch.over_pos] - labels[ch.under_pos] + 1 - ch.sign
        out[cid] = (ch.sign, index, parities[cid] % 2)
    return out


_KINDS = (R1_INSERT, R1_DELETE, R2_INSERT, R2_DELETE, R3)


def _sample_move(d: GaussDiagram, rng: random.Random) -> Move:
    """Uniform over available move kinds, then uniform within the kind.

    Insert kinds are sampled directly from their parameter space instead of
    materialising the full descriptor list, which keeps walks unbiased
    towards growth and cheap on large diagrams.  A drawn kind with no
    candidates is discarded and the draw repeated over the rest; by symmetry
    this is the uniform distribution over available kinds, while candidate
    lists are only built for kinds actually drawn.
    """
    remaining = list(_KINDS)
    while True:
        kind = rng.choice(remaining)
        arcs = max(1, d.arc_count)
        if kind == R1_INSERT:
            return Move(
                kind=R1_INSERT,
                arcs=(rng.randrange(arcs),),
                sign=rng.choice((1, -1)),
                over_first=rng.choice((True, False)),
            )
        if kind == R2_INSERT:
            return Move(
                kind=R2_INSERT,
                arcs=(rng.randrange(arcs), rng.randrange(arcs)),
                sign=rng.choice((1, -1)),
                nested=rng.choice((True, False)),
            )
        if kind == R1_DELETE:
            candidates = _r1_delete_moves(d)
        elif kind == R2_DELETE:
            candidates = _r2_delete_moves(d)
        else:
            candidates = list(_r3_moves(d))
        if candidates:
            return rng.choice(candidates)
        remaining.remove(kind)


def walk_trace(
    d: GaussDiagram, steps: int, seed: int
) -> Iterator[tuple[int, Move, GaussDiagram]]:
    """Apply ``steps`` randomly chosen applicable moves, yielding each step.

    Deterministic for a given seed.
    """
    rng = random.Random(seed)
    for step in range(steps):
        move = _sample_move(d, rng)
        d = apply_move(d, move)
        yield step, move, d


def random_walk(d: GaussDiagram, steps: int, seed: int) -> GaussDiagram:
    """Final diagram of :func:`walk_trace`; with 0 steps, the input itself."""
    for _, _, d in walk_trace(d, steps, seed):
        pass
    return d
