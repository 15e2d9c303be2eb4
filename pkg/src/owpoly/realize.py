"""Constructive realization of admissible polynomials as virtual knots.

A Laurent polynomial is the odd writhe polynomial of some virtual knot iff
all its exponents are even and its coefficient sum is even.  The
construction assembles connected sums of fixed building blocks:

* ``block_l(k)``: 2k positive chords, one "vertical" chord interleaving 2k-1
  parallel "horizontal" ones; its polynomial is t^{2k} + 2k - 1.  Its
  inverse, mirror, and inverse-mirror supply the polynomials
  t^{2-2k} + (2k-1)t^2,  -t^{2-2k} - (2k-1)t^2,  and  -t^{2k} - (2k-1).
* ``block_m()``: the virtual trefoil, polynomial t^2 + 1.
* ``block_n()``: a three-chord knot with polynomial t^2 - 1 (the smallest
  diagrams with this polynomial have three chords).

High-degree terms are matched by L blocks, which leak residual t^2 and t^0
terms; the residuals are computed from the blocks' exact polynomials and
cleared with copies of M and N.  Since the polynomial is splice-independent
under connected sum, all splices happen at arc 0.  The assembled diagram is
re-checked against the request before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gauss import OVER, UNDER, Endpoint, GaussDiagram, parse
from .invariants import odd_writhe_polynomial
from .laurent import Laurent, format_poly
from .transforms import connected_sum, inverse, mirror

PLAIN = "PLAIN"
STAR = "STAR"  # inverse
BAR = "BAR"  # mirror
BAR_STAR = "BAR_STAR"  # mirror of inverse

#: Lexicographically least canonical 3-chord diagram with polynomial t^2 - 1.
BLOCK_N_CODE = "O1+O2+U1+O3-U2+U3-"


class RealizationError(ValueError):
    """The requested polynomial cannot be realized."""


class OddExponentError(RealizationError):
    """Some exponent is odd."""


class OddCoefficientSumError(RealizationError):
    """The coefficient sum is odd."""


class SelfCheckError(RuntimeError):
    """The assembled diagram's polynomial missed the request (engine bug)."""


def block_l(k: int) -> GaussDiagram:
    """The 2k-chord block with polynomial t^{2k} + 2k - 1 (k >= 1)."""
    if k < 1:
        raise RealizationError(f"block parameter must be >= 1, got {k}")
    eps = [Endpoint(1, OVER, 1)]
    eps += [Endpoint(i, OVER, 1) for i in range(2, 2 * k + 1)]
    eps.append(Endpoint(1, UNDER, 1))
    eps += [Endpoint(i, UNDER, 1) for i in range(2 * k, 1, -1)]
    return GaussDiagram(eps)


def block_m() -> GaussDiagram:
    """The virtual trefoil; polynomial t^2 + 1."""
    return block_l(1)


def block_n() -> GaussDiagram:
    """A knot with odd writhe 0 but polynomial t^2 - 1."""
    return parse(BLOCK_N_CODE)


def _variant(base: GaussDiagram, variant: str) -> GaussDiagram:
    if variant == PLAIN:
        return base
    if variant == STAR:
        return inverse(base)
    if variant == BAR:
        return mirror(base)
    if variant == BAR_STAR:
        return mirror(inverse(base))
    raise ValueError(f"unknown block variant {variant!r}")


@dataclass(frozen=True)
class LBlock:
    k: int
    count: int
    variant: str


@dataclass(frozen=True)
class RealizationPlan:
    """Block inventory whose polynomials sum to the requested one.

    ``residual_t2``/``residual_t0`` are the t^2 and constant coefficients
    contributed by the L blocks; ``m_count``/``n_count`` are signed (negative
    means the mirror-inverse variant of the block).
    """

    l_blocks: tuple[LBlock, ...]
    m_count: int
    n_count: int
    residual_t2: int
    residual_t0: int


def validate_target(f: Laurent) -> None:
    """Raise unless every exponent is even and the coefficient sum is even."""
    odd_exps = sorted(e for e in f.exponents() if e % 2 != 0)
    if odd_exps:
        raise OddExponentError(f"odd exponent(s) {odd_exps} in {format_poly(f)}")
    if f.coefficient_sum() % 2 != 0:
        raise OddCoefficientSumError(
            f"coefficient sum {f.coefficient_sum()} of {format_poly(f)} is odd"
        )


def plan(f: Laurent) -> RealizationPlan:
    """Choose blocks realizing ``f``; raises the validation errors."""
    validate_target(f)
    l_blocks: list[LBlock] = []
    acc = Laurent()
    for exp, coeff in f.items_desc():
        if exp >= 4:
            variant = PLAIN if coeff > 0 else BAR_STAR
            l_blocks.append(LBlock(exp // 2, abs(coeff), variant))
        elif exp <= -2:
            variant = STAR if coeff > 0 else BAR
            l_blocks.append(LBlock((2 - exp) // 2, abs(coeff), variant))
        else:
            continue
        block_poly = odd_writhe_polynomial(_variant(block_l(l_blocks[-1].k), variant))
        for _ in range(l_blocks[-1].count):
            acc = acc + block_poly
    b2, b0 = acc.coeff(2), acc.coeff(0)
    need_t2 = f.coeff(2) - b2
    need_t0 = f.coeff(0) - b0
    if (need_t2 + need_t0) % 2 != 0:
        raise SelfCheckError("residual coefficient sum is odd")  # unreachable
    return RealizationPlan(
        l_blocks=tuple(l_blocks),
        m_count=(need_t2 + need_t0) // 2,
        n_count=(need_t2 - need_t0) // 2,
        residual_t2=b2,
        residual_t0=b0,
    )


def realize(f: Laurent) -> GaussDiagram:
    """A virtual knot whose odd writhe polynomial is exactly ``f``.

    Deterministic; the result has the sum of the plan's block sizes as its
    chord count.  The polynomial of the assembled diagram is recomputed and
    compared against ``f`` before returning.
    """
    p = plan(f)
    result = GaussDiagram(())
    for block in p.l_blocks:
        piece = _variant(block_l(block.k), block.variant)
        for _ in range(block.count):
            result = connected_sum(result, 0, piece, 0)
    for count, base in ((p.m_count, block_m()), (p.n_count, block_n())):
        piece = base if count > 0 else mirror(inverse(base))
        for _ in range(abs(count)):
            result = connected_sum(result, 0, piece, 0)
    got = odd_writhe_polynomial(result)
    if got != f:
        raise SelfCheckError(
            f"assembly produced {format_poly(got)}, wanted {format_poly(f)}"
        )
    return result
