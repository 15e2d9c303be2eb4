"""Property suites: randomized and exhaustive checks of every identity the
invariants satisfy, with greedy chord-deletion shrinking of counterexamples.

Each suite returns a :class:`SuiteResult`; a nonempty ``violations`` list
means some identity failed and carries minimized Gauss codes for debugging.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .gauss import GaussDiagram, Endpoint, OVER, UNDER, enumerate_diagrams, serialize
from .invariants import (
    Obstructions,
    arc_labels,
    interleave_counts,
    odd_writhe,
    odd_writhe_polynomial,
    report,
    symmetry_obstructions,
)
from .laurent import Laurent, format_poly
from .moves import walk_trace
from .realize import (
    OddCoefficientSumError,
    OddExponentError,
    RealizationError,
    block_l,
    block_n,
    realize,
    validate_target,
)
from .transforms import connected_sum, delete_chord, inverse, mirror


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "pass" if self.passed else f"FAIL ({len(self.violations)})"
        return f"{self.name}: {status} after {self.checked} checks"


def invariant_fingerprint(
    d: GaussDiagram,
) -> tuple[Laurent, int, int, Obstructions]:
    """(f, J, Deg f, obstruction flags) without a full report; everything is
    derived from f, so one polynomial computation suffices."""
    f = odd_writhe_polynomial(d)
    return f, f.evaluate(1), f.max_abs_degree(), symmetry_obstructions(f)


def random_diagram(rng: random.Random, max_chords: int, min_chords: int = 0) -> GaussDiagram:
    """A uniformly decorated random diagram with chord count in the range."""
    n = rng.randint(min_chords, max_chords)
    positions = list(range(2 * n))
    rng.shuffle(positions)
    eps: list[Endpoint | None] = [None] * (2 * n)
    for cid in range(1, n + 1):
        a, b = positions[2 * cid - 2], positions[2 * cid - 1]
        sign = rng.choice((1, -1))
        eps[a] = Endpoint(cid, OVER, sign)
        eps[b] = Endpoint(cid, UNDER, sign)
    return GaussDiagram(eps)


def random_admissible_poly(rng: random.Random) -> Laurent:
    """Even exponents in [-10, 10], coefficients in [-5, 5], even sum."""
    exps = rng.sample(range(-5, 6), k=rng.randint(0, 6))
    terms = {2 * e: rng.randint(-5, 5) for e in exps}
    total = sum(terms.values())
    if total % 2 != 0:
        e = 2 * exps[0] if exps else 0
        bump = terms.get(e, 0)
        terms[e] = bump + (1 if bump < 5 else -1)
    return Laurent(terms)


def shrink_diagram(
    d: GaussDiagram, violates: Callable[[GaussDiagram], bool]
) -> GaussDiagram:
    """Greedily delete chords while the violation persists."""
    changed = True
    while changed:
        changed = False
        for cid in sorted(d.chords):
            smaller = delete_chord(d, cid)
            if violates(smaller):
                d = smaller
                changed = True
                break
    return d


def _small_diagrams(max_n: int) -> Iterator[GaussDiagram]:
    for n in range(max_n + 1):
        yield from enumerate_diagrams(n)


def _record(result: SuiteResult, d: GaussDiagram,
            violates: Callable[[GaussDiagram], bool], message: str) -> None:
    small = shrink_diagram(d, violates)
    result.violations.append(f"{message}; shrunk counterexample {serialize(small)!r}")


def suite_lemma22(iterations: int = 10000, seed: int = 0, exhaustive: int = 3,
                  max_chords: int = 6) -> SuiteResult:
    """The odd writhe is even, exhaustively for small n and at random."""
    result = SuiteResult("lemma22")
    violates = lambda d: odd_writhe(d) % 2 != 0

    def check(d: GaussDiagram) -> None:
        result.checked += 1
        if violates(d):
            _record(result, d, violates, f"odd writhe {odd_writhe(d)} is odd")

    for d in _small_diagrams(exhaustive):
        check(d)
    rng = random.Random(seed)
    for _ in range(iterations):
        check(random_diagram(rng, max_chords))
    return result


def suite_structural(iterations: int = 0, seed: int = 0, exhaustive: int = 3,
                     max_chords: int = 6) -> SuiteResult:
    """Arc-label steps, parity/index parity, f(+-1) = J, even exponents,
    and the degree bound, exhaustively for small n."""
    result = SuiteResult("structural")

    def problems(d: GaussDiagram) -> list[str]:
        out = []
        labels = arc_labels(d)
        for pos, (_, kind, sign) in enumerate(d.endpoints):
            step = labels[(pos + 1) % len(labels)] - labels[pos]
            want = -sign if kind == OVER else sign
            if step != want:
                out.append(f"label step {step} != {want} at {pos}")
        rep = report(d)
        for row in rep.chords:
            if row.odd and row.index % 2 != 0:
                out.append(f"odd chord {row.chord_id} has odd index {row.index}")
        f = rep.odd_writhe_poly
        if f.evaluate(1) != rep.odd_writhe or f.evaluate(-1) != rep.odd_writhe:
            out.append("f(+-1) != J")
        if any(e % 2 for e in f.exponents()):
            out.append("odd exponent in f")
        if rep.degree > d.n:
            out.append(f"degree {rep.degree} exceeds chord count {d.n}")
        return out

    def check(d: GaussDiagram) -> None:
        result.checked += 1
        issues = problems(d)
        if issues:
            _record(result, d, lambda x: bool(problems(x)),
                    f"{serialize(d)!r}: {'; '.join(issues)}")

    for d in _small_diagrams(exhaustive):
        check(d)
    rng = random.Random(seed)
    for _ in range(iterations):
        check(random_diagram(rng, max_chords))
    return result


def suite_deletion_parity(iterations: int = 0, seed: int = 0,
                          exhaustive: int = 3, max_chords: int = 6) -> SuiteResult:
    """Deleting a chord flips exactly its interleaved chords' parities."""
    result = SuiteResult("deletion_parity")

    def check(d: GaussDiagram) -> None:
        counts = interleave_counts(d)
        for cid in d.chords:
            result.checked += 1
            smaller = delete_chord(d, cid)
            after = interleave_counts(smaller)
            for other in smaller.chords:
                flips = (counts[other] - after[other]) % 2 == 1
                crosses = _interleaved(d, cid, other)
                if flips != crosses:
                    result.violations.append(
                        f"deleting {cid} from {serialize(d)!r}: chord {other} "
                        f"parity {'flip' if flips else 'kept'} but "
                        f"{'crosses' if crosses else 'does not cross'}"
                    )

    for d in _small_diagrams(exhaustive):
        check(d)
    rng = random.Random(seed)
    for _ in range(iterations):
        check(random_diagram(rng, max_chords, min_chords=1))
    return result


def _interleaved(d: GaussDiagram, c: int, e: int) -> bool:
    lo, hi = sorted((d.chords[c].over_pos, d.chords[c].under_pos))
    ce = d.chords[e]
    return (lo < ce.over_pos < hi) != (lo < ce.under_pos < hi)


def suite_transforms(iterations: int = 10000, seed: int = 0, exhaustive: int = 3,
                     max_chords: int = 6) -> SuiteResult:
    """Inverse/mirror identities for f and J, and the involution laws."""
    result = SuiteResult("transforms")

    def problems(d: GaussDiagram) -> list[str]:
        out = []
        f = odd_writhe_polynomial(d)
        flipped = f.substitute_inverse().mul_monomial(1, 2)
        if odd_writhe_polynomial(inverse(d)) != flipped:
            out.append("f(inverse) != f(1/t) t^2")
        if odd_writhe_polynomial(mirror(d)) != -flipped:
            out.append("f(mirror) != -f(1/t) t^2")
        if odd_writhe_polynomial(mirror(inverse(d))) != -f:
            out.append("f != -f(mirror . inverse)")
        if odd_writhe(mirror(d)) != -odd_writhe(d):
            out.append("J(mirror) != -J")
        if inverse(inverse(d)) != d or mirror(mirror(d)) != d:
            out.append("inverse/mirror not involutions")
        if mirror(inverse(d)) != inverse(mirror(d)):
            out.append("inverse and mirror do not commute")
        return out

    def check(d: GaussDiagram) -> None:
        result.checked += 1
        issues = problems(d)
        if issues:
            _record(result, d, lambda x: bool(problems(x)),
                    f"{serialize(d)!r}: {'; '.join(issues)}")

    for d in _small_diagrams(exhaustive):
        check(d)
    rng = random.Random(seed)
    for _ in range(iterations):
        check(random_diagram(rng, max_chords))
    return result


def suite_connected_sum(iterations: int = 200, seed: int = 0,
                        max_chords: int = 4, **_: object) -> SuiteResult:
    """f is additive under connected sum for every pair of splice arcs."""
    result = SuiteResult("connected_sum")
    rng = random.Random(seed)
    for _ in range(iterations):
        da = random_diagram(rng, max_chords)
        db = random_diagram(rng, max_chords)
        want = odd_writhe_polynomial(da) + odd_writhe_polynomial(db)
        for arc_a in range(max(1, da.arc_count)):
            for arc_b in range(max(1, db.arc_count)):
                result.checked += 1
                got = odd_writhe_polynomial(connected_sum(da, arc_a, db, arc_b))
                if got != want:
                    result.violations.append(
                        f"sum of {serialize(da)!r} (arc {arc_a}) and "
                        f"{serialize(db)!r} (arc {arc_b}): f {format_poly(got)} "
                        f"!= {format_poly(want)}"
                    )
    return result


def walk_seed_diagrams() -> tuple[GaussDiagram, ...]:
    """Standard walk starting points: unknot, virtual trefoil, the t^2 - 1
    block, and the degree-4 block."""
    from .gauss import parse

    return (
        GaussDiagram(()),
        parse("O1+O2+U1+U2+"),
        block_n(),
        block_l(2),
    )


def _replay_violates(start: GaussDiagram, moves: list,
                     fingerprint: tuple) -> bool:
    from .moves import InapplicableMoveError, apply_move

    d = start
    try:
        for move in moves:
            d = apply_move(d, move)
    except InapplicableMoveError:
        return False  # dropping earlier moves invalidated this one
    return invariant_fingerprint(d) != fingerprint


def shrink_move_sequence(start: GaussDiagram, moves: list,
                         fingerprint: tuple) -> list:
    """Greedily drop moves while the final fingerprint still deviates."""
    changed = True
    while changed:
        changed = False
        for k in range(len(moves)):
            candidate = moves[:k] + moves[k + 1:]
            if _replay_violates(start, candidate, fingerprint):
                moves = candidate
                changed = True
                break
    return moves


def suite_moves(iterations: int = 100, seed: int = 0, steps: int = 200,
                **_: object) -> SuiteResult:
    """f, J, degree, and obstruction flags survive random move walks; every
    accepted R3 preserves each involved chord's (sign, index, parity)."""
    result = SuiteResult("moves")
    starts = walk_seed_diagrams()
    for walk in range(iterations):
        start = starts[walk % len(starts)]
        fingerprint = invariant_fingerprint(start)
        history: list = []
        for step, move, d in walk_trace(start, steps, seed + walk):
            result.checked += 1
            history.append(move)
            got = invariant_fingerprint(d)
            if got != fingerprint:
                small = shrink_move_sequence(start, history, fingerprint)
                result.violations.append(
                    f"walk {walk} step {step} from {serialize(start)!r}: "
                    f"invariants changed to f={format_poly(got[0])}; "
                    f"shrunk move sequence "
                    f"{[m.to_dict() for m in small]}"
                )
                break
    return result


def suite_realize(iterations: int = 100, seed: int = 0, **_: object) -> SuiteResult:
    """Realization round-trips, plus rejection of the two inadmissible
    classes (an odd exponent; an odd coefficient sum)."""
    result = SuiteResult("realize")
    rng = random.Random(seed)
    for _ in range(iterations):
        f = random_admissible_poly(rng)
        result.checked += 1
        got = odd_writhe_polynomial(realize(f))
        if got != f:
            result.violations.append(
                f"realize({format_poly(f)}) produced {format_poly(got)}"
            )
    for terms, error in (
        ({3: 1}, OddExponentError),
        ({2: 1, 0: 1, -2: 1}, OddCoefficientSumError),
    ):
        result.checked += 1
        try:
            validate_target(Laurent(terms))
        except error:
            pass
        except RealizationError as exc:
            result.violations.append(f"wrong rejection {exc!r} for {terms}")
        else:
            result.violations.append(f"{terms} was not rejected")
    return result


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "lemma22": suite_lemma22,
    "structural": suite_structural,
    "deletion": suite_deletion_parity,
    "transforms": suite_transforms,
    "sum": suite_connected_sum,
    "moves": suite_moves,
    "realize": suite_realize,
}


def run_suite(name: str, iterations: int | None = None, seed: int = 0,
              exhaustive: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    kwargs: dict = {"seed": seed}
    if iterations is not None:
        kwargs["iterations"] = iterations
    if exhaustive is not None:
        kwargs["exhaustive"] = exhaustive
    return SUITES[name](**kwargs)
