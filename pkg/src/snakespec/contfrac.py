"""Finite continued fractions over the integers and over integer polynomials.

``[a1, a2, ...]`` denotes ``a1 + 1/(a2 + 1/(...))`` (positive kind) and
``[[c1, c2, ...]]`` denotes ``c1 - 1/(c2 - 1/(...))`` (negative kind).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence, Union

from .graph import PlaneGraph, blacken, neighbour_counts
from .polynomials import ONE, ZERO, IntPoly

Term = Union[int, IntPoly]
Kind = Literal["positive", "negative"]


class ContFracError(ValueError):
    pass


@dataclass(frozen=True)
class Convergent:
    p: Term
    q: Term

    def value(self) -> Fraction:
        if not isinstance(self.p, int):
            raise ContFracError("only integer convergents have a rational value")
        if self.q == 0:
            raise ContFracError("convergent has zero denominator")
        return Fraction(self.p, self.q)


@dataclass(frozen=True)
class CFrac:
    kind: Kind
    terms: tuple

    def __post_init__(self):
        if self.kind not in ("positive", "negative"):
            raise ContFracError(f"unknown kind {self.kind!r}")
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise ContFracError("a continued fraction needs at least one term")
        for t in terms:
            if isinstance(t, IntPoly):
                if t.degree < 1:
                    raise ContFracError("polynomial terms must be non-constant")
            elif isinstance(t, int):
                floor = 1 if self.kind == "positive" else 2
                if t < floor:
                    raise ContFracError(f"{self.kind} continued fractions need integer terms >= {floor}")
            else:
                raise ContFracError(f"unsupported term {t!r}")

    @classmethod
    def positive(cls, terms: Sequence[Term]) -> "CFrac":
        return cls("positive", tuple(terms))

    @classmethod
    def negative(cls, terms: Sequence[Term]) -> "CFrac":
        return cls("negative", tuple(terms))

    @classmethod
    def parse(cls, text: str) -> "CFrac":
        """Read ``[2,2,2,1,1,1]`` or ``[[3,2,4,3]]``."""
        s = re.sub(r"\s+", "", text)
        m = re.fullmatch(r"\[\[(.*)\]\]", s)
        kind: Kind = "negative"
        if m is None:
            m = re.fullmatch(r"\[(.*)\]", s)
            kind = "positive"
        if m is None or not m.group(1):
            raise ContFracError(f"cannot parse continued fraction {text!r}")
        try:
            terms = tuple(int(t) for t in m.group(1).split(","))
        except ValueError as exc:
            raise ContFracError(f"non-integer term in {text!r}") from exc
        return cls(kind, terms)

    def signed_terms(self) -> tuple:
        """Terms of the equivalent positive expansion (alternating signs for the negative kind)."""
        if self.kind == "positive":
            return self.terms
        return tuple(t if i % 2 == 0 else -t for i, t in enumerate(self.terms))

    def convergents(self) -> list[Convergent]:
        return convergents(self)

    def value(self) -> Fraction:
        return convergents(self)[-1].value()

    def __str__(self):
        body = ",".join(str(t) for t in self.terms)
        return f"[{body}]" if self.kind == "positive" else f"[[{body}]]"

    def to_json(self) -> dict:
        return {"kind": self.kind, "terms": [str(t) if isinstance(t, IntPoly) else t for t in self.terms]}


def convergents(cf: CFrac) -> list[Convergent]:
    """``(p_l, q_l)`` for ``l = 1..k`` with ``p_l = a_l p_{l-1} + p_{l-2}``."""
    poly = isinstance(cf.terms[0], IntPoly)
    one, zero = (ONE, ZERO) if poly else (1, 0)
    p_prev, p = zero, one
    q_prev, q = one, zero
    out = []
    for a in cf.signed_terms():
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        out.append(Convergent(p, q))
    return out


def value(cf: CFrac) -> Fraction:
    """Reduced rational value with a positive denominator."""
    return cf.value()


def numerator(cf: CFrac) -> Term:
    return convergents(cf)[-1].p


# ---------------------------------------------------------------------------
# Positive <-> negative expansions
# ---------------------------------------------------------------------------


def pos_to_neg(a: CFrac | Sequence[int]) -> CFrac:
    """``[a1, ..., an]`` (n even) -> ``[[a1+1, 2^(a2-1), a3+2, 2^(a4-1), ...]]``.

    Here ``2^(k)`` means ``k`` copies of the term 2.
    """
    terms = a.terms if isinstance(a, CFrac) else tuple(a)
    if isinstance(a, CFrac) and a.kind != "positive":
        raise ContFracError("pos_to_neg expects a positive continued fraction")
    if len(terms) % 2:
        raise ContFracError("pos_to_neg needs an even number of terms; normalise first")
    if any(not isinstance(t, int) or t < 1 for t in terms):
        raise ContFracError("pos_to_neg needs integer terms >= 1")
    c: list[int] = []
    for i in range(0, len(terms), 2):
        c.append(terms[i] + (1 if i == 0 else 2))
        c.extend([2] * (terms[i + 1] - 1))
    return CFrac.negative(c)


def neg_to_pos(c: CFrac | Sequence[int]) -> CFrac:
    """Inverse of ``pos_to_neg``; the result always has even length.

    Parsing is unambiguous: after the first term every term above 2 opens a
    new odd-position term, and each maximal run of 2s fixes the following
    even-position term.
    """
    terms = c.terms if isinstance(c, CFrac) else tuple(c)
    if isinstance(c, CFrac) and c.kind != "negative":
        raise ContFracError("neg_to_pos expects a negative continued fraction")
    if not terms or any(not isinstance(t, int) or t < 2 for t in terms):
        raise ContFracError("neg_to_pos needs integer terms >= 2")
    a = [terms[0] - 1]
    i = 1
    while True:
        run = 0
        while i < len(terms) and terms[i] == 2:
            run += 1
            i += 1
        a.append(run + 1)
        if i == len(terms):
            break
        a.append(terms[i] - 2)
        i += 1
    return CFrac.positive(a)


def normalize_even(a: CFrac | Sequence[int]) -> CFrac:
    """Equal-valued positive expansion of even length.

    An odd-length expansion ending in 1 merges it into the previous term;
    otherwise the last term is lowered by one and a 1 appended.
    """
    terms = list(a.terms if isinstance(a, CFrac) else a)
    if any(not isinstance(t, int) or t < 1 for t in terms) or not terms:
        raise ContFracError("normalize_even needs integer terms >= 1")
    if len(terms) % 2 == 0:
        return CFrac.positive(terms)
    if terms[-1] == 1:
        if len(terms) == 1:
            raise ContFracError("[1] has no even-length expansion with terms >= 1")
        terms[-2] += 1
        terms.pop()
    else:
        terms[-1] -= 1
        terms.append(1)
    return CFrac.positive(terms)


# ---------------------------------------------------------------------------
# Characteristic polynomials from boundary data
# ---------------------------------------------------------------------------


def sigma(l: int) -> int:
    return (2 * l + (-1) ** l - 1) // 4


def epsilon(l: int) -> int:
    """Sign relating the ``l``-th numerator to the monic char poly: 1, 1, -1, -1, ... from ``l = 0``."""
    return -1 if sigma(l) % 2 else 1


def charpoly_from_boundary(e: Sequence[int]) -> IntPoly:
    """Monic char poly recovered from the numerator of ``[[x - e1, ..., x - ek]]``."""
    if not e:
        return ONE
    terms = [IntPoly.linear(int(v)) for v in e]
    p = numerator(CFrac.negative(terms))
    return epsilon(len(e)) * p


def matchings_from_boundary(e: Sequence[int]) -> int:
    return abs(charpoly_from_boundary(e)(0))


def boundary_contfrac(e: Sequence[int]) -> CFrac:
    return CFrac.negative([int(v) for v in e])


def canonical_side(g: PlaneGraph) -> str:
    """``upper`` when the lower-left corner of the first tile is black, else ``lower``.

    This is the boundary whose neighbour counts reproduce the sign sequence
    built with the first tile's bottom edge as the first internal edge.
    """
    return "upper" if g.black[g.tiles[0][0]] else "lower"


def sign_sequence(g: PlaneGraph, side: str | None = None) -> CFrac:
    """Positive expansion whose numerator counts perfect matchings.

    Obtained by blackening ``g``, reading neighbour counts along one boundary
    and inverting the positive-to-negative conversion.
    """
    bg = blacken(g)
    if side is None:
        side = canonical_side(bg)
    e = neighbour_counts(bg, side)
    return neg_to_pos(e)
