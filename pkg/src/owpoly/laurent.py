"""Exact integer Laurent polynomials in one variable t.

The value type of every invariant in this package.  Coefficients are
arbitrary-precision Python ints; exponents may be negative.  Only the
operations the invariants need are provided: addition, negation, the
substitution t -> 1/t, multiplication by a single monomial, evaluation,
and the degree max{|i| : a_i != 0}.  There is deliberately no general
polynomial multiplication.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

TermsLike = Union[Mapping[int, int], Iterable[tuple[int, int]]]


class PolySyntaxError(ValueError):
    """Text does not match the polynomial grammar."""


class Laurent:
    """Immutable integer Laurent polynomial; zero coefficients are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: TermsLike = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coeff in items:
            acc[exp] = acc.get(exp, 0) + coeff
        self._terms: dict[int, int] = {e: c for e, c in acc.items() if c}

    @classmethod
    def zero(cls) -> Laurent:
        return cls()

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> Laurent:
        return cls({exp: coeff})

    def terms(self) -> dict[int, int]:
        """Exponent -> coefficient map (a fresh dict)."""
        return dict(self._terms)

    def items_desc(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in descending exponent order."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def exponents(self) -> set[int]:
        return set(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Laurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: Laurent) -> Laurent:
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return Laurent(acc)

    def __neg__(self) -> Laurent:
        return Laurent({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Laurent) -> Laurent:
        return self + (-other)

    def substitute_inverse(self) -> Laurent:
        """The polynomial with t replaced by 1/t (exponents negated)."""
        return Laurent({-e: c for e, c in self._terms.items()})

    def mul_monomial(self, coeff: int, exp: int) -> Laurent:
        """Multiply by ``coeff * t**exp``."""
        if coeff == 0:
            return Laurent()
        return Laurent({e + exp: c * coeff for e, c in self._terms.items()})

    def evaluate(self, x: int) -> int:
        """Exact value at an integer point (x = +-1 for invariant use)."""
        return sum(c * x**e for e, c in self._terms.items())

    def max_abs_degree(self) -> int:
        """max{|exponent|} over stored terms; 0 for the zero polynomial."""
        if not self._terms:
            return 0
        return max(abs(e) for e in self._terms)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Laurent({format_poly(self)!r})"


def add(p: Laurent, q: Laurent) -> Laurent:
    return p + q


def negate(p: Laurent) -> Laurent:
    return -p


def format_poly(p: Laurent) -> str:
    """Canonical text form: terms in descending exponent order, no spaces.

    Examples: ``t^4-2t^2+1``, ``3t``, ``t^-2-2+t^2`` is rendered as
    ``t^2-2+t^-2``, and the zero polynomial as ``0``.
    """
    if not p:
        return "0"
    pieces: list[str] = []
    for exp, coeff in p.items_desc():
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if exp == 0:
            body = str(mag)
        else:
            var = "t" if exp == 1 else f"t^{exp}"
            body = var if mag == 1 else f"{mag}{var}"
        pieces.append(sign + body)
    out = "".join(pieces)
    return out[1:] if out.startswith("+") else out


_TERM = re.compile(
    r"""(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>[0-9]+)\s*\*?\s*(?P<var1>t(\^(?P<exp1>-?[0-9]+))?)?
          | (?P<var2>t(\^(?P<exp2>-?[0-9]+))?)
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> Laurent:
    """Parse the canonical text form (tolerant of whitespace and ``*``)."""
    s = text.strip()
    if not s:
        raise PolySyntaxError("empty polynomial text")
    if s == "0":
        return Laurent()
    terms: list[tuple[int, int]] = []
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise PolySyntaxError(f"bad term at position {pos}: {s[pos:pos+8]!r}")
        if not first and m.group("sign") is None:
            raise PolySyntaxError(f"missing +/- before position {pos}")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        if m.group("var1") or m.group("var2"):
            exp_text = m.group("exp1") or m.group("exp2")
            exp = int(exp_text) if exp_text else 1
        else:
            exp = 0
        terms.append((exp, sign * coeff))
        pos = m.end()
        first = False
    return Laurent(terms)


def poly_to_map(p: Laurent) -> dict[str, int]:
    """JSON map form: string exponent keys, descending exponent order."""
    return {str(e): c for e, c in p.items_desc()}


def poly_from_map(m: Mapping[str, int] | Mapping[int, int]) -> Laurent:
    return Laurent({int(e): int(c) for e, c in m.items()})
