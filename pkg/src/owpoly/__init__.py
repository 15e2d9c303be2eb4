"""Odd writhe polynomial invariants of virtual knots, from Gauss codes.

Virtual knots are represented purely combinatorially as Gauss diagrams.
The package computes the odd writhe J, the odd writhe polynomial f (an
integer Laurent polynomial invariant with f(+-1) = J), crossing-number
lower bounds, and symmetry obstructions; rewrites diagrams by Reidemeister
moves to exercise invariance; and constructs, for any Laurent polynomial
with even exponents and even coefficient sum, a virtual knot realizing it.
"""

from .gauss import (
    Chord,
    Endpoint,
    GaussCodeError,
    GaussDiagram,
    GaussSyntaxError,
    InvalidArcError,
    SignMismatchError,
    UnknownChordError,
    UnmatchedLabelError,
    canonicalize,
    enumerate_diagrams,
    interleaves,
    parse,
    serialize,
)
from .invariants import (
    ChordReport,
    InvariantReport,
    Obstructions,
    arc_labels,
    chord_index,
    crossing_lower_bound,
    full_writhe_polynomial,
    interleave_counts,
    is_odd_chord,
    odd_writhe,
    odd_writhe_polynomial,
    report,
    symmetry_obstructions,
)
from .laurent import (
    Laurent,
    PolySyntaxError,
    format_poly,
    parse_poly,
    poly_from_map,
    poly_to_map,
)
from .moves import (
    InapplicableMoveError,
    Move,
    MoveGuardError,
    applicable_moves,
    apply_move,
    random_walk,
    walk_trace,
)
from .realize import (
    BLOCK_N_CODE,
    LBlock,
    OddCoefficientSumError,
    OddExponentError,
    RealizationError,
    RealizationPlan,
    SelfCheckError,
    block_l,
    block_m,
    block_n,
    plan,
    realize,
    validate_target,
)
from .transforms import connected_sum, delete_chord, inverse, mirror

__version__ = "1.0.0"

__all__ = [
    "BLOCK_N_CODE",
    "Chord",
    "ChordReport",
    "Endpoint",
    "GaussCodeError",
    "GaussDiagram",
    "GaussSyntaxError",
    "InapplicableMoveError",
    "InvalidArcError",
    "InvariantReport",
    "LBlock",
    "Laurent",
    "Move",
    "MoveGuardError",
    "Obstructions",
    "OddCoefficientSumError",
    "OddExponentError",
    "PolySyntaxError",
    "RealizationError",
    "RealizationPlan",
    "SelfCheckError",
    "SignMismatchError",
    "UnknownChordError",
    "UnmatchedLabelError",
    "applicable_moves",
    "apply_move",
    "arc_labels",
    "block_l",
    "block_m",
    "block_n",
    "canonicalize",
    "chord_index",
    "connected_sum",
    "crossing_lower_bound",
    "delete_chord",
    "enumerate_diagrams",
    "format_poly",
    "full_writhe_polynomial",
    "interleave_counts",
    "interleaves",
    "inverse",
    "is_odd_chord",
    "mirror",
    "odd_writhe",
    "odd_writhe_polynomial",
    "parse",
    "parse_poly",
    "plan",
    "poly_from_map",
    "poly_to_map",
    "random_walk",
    "realize",
    "report",
    "serialize",
    "symmetry_obstructions",
    "validate_target",
    "walk_trace",
]
