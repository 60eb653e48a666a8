"""Monomial symmetric functions of the limit invariant ring.

Elements are finite rational combinations of m_Lambda, where Lambda runs
over tri-partitions with z-exponents below r.  The site relation
x*y = z^r is built into the product rule: whenever two triples merge and
the z-exponents overflow past r-1, one unit of x and y is traded in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import Triple, check_triple, triple_degree


@dataclass(frozen=True)
class TriPartition:
    """A multiset of exponent triples, stored sorted for canonical hashing."""

    r: int
    triples: tuple[Triple, ...]

    @classmethod
    def from_triples(cls, r: int, triples) -> "TriPartition":
        triples = tuple(sorted(triples, reverse=True))
        for t in triples:
            check_triple(t, r)
        return cls(r, triples)

    @classmethod
    def empty(cls, r: int) -> "TriPartition":
        return cls(r, ())

    @property
    def length(self) -> int:
        return len(self.triples)

    @property
    def degree(self) -> int:
        return sum(triple_degree(t, self.r) for t in self.triples)

    @property
    def e_count(self) -> int:
        """Multiplicity of (0, 1, 0)."""
        return self.triples.count((0, 1, 0))

    @property
    def torus_weight(self) -> int:
        return sum(a - b for a, b, _ in self.triples)

    def mult(self, t: Triple) -> int:
        return self.triples.count(t)

    def remove(self, t: Triple) -> "TriPartition":
        lst = list(self.triples)
        lst.remove(t)
        return TriPartition(self.r, tuple(lst))

    def add(self, t: Triple) -> "TriPartition":
        return TriPartition(self.r, tuple(sorted(self.triples + (t,), reverse=True)))

    def distinct(self) -> list[Triple]:
        return sorted(set(self.triples), reverse=True)

    def __str__(self):
        if not self.triples:
            return "m[]"
        return "m[" + "".join(f"({a},{b},{c})" for a, b, c in self.triples) + "]"


def tri_degree(lam: TriPartition) -> int:
    """Total weight sum of r*(a+b) + 2c over the triples."""
    return lam.degree


@dataclass
class SymElement:
    """A finite rational combination of monomial symmetric functions."""

    r: int
    terms: dict[TriPartition, Fraction] = field(default_factory=dict)

    @classmethod
    def monomial(cls, lam: TriPartition, coeff=1) -> "SymElement":
        c = Fraction(coeff)
        return cls(lam.r, {lam: c} if c else {})

    @classmethod
    def zero(cls, r: int) -> "SymElement":
        return cls(r, {})

    def add_term(self, lam: TriPartition, coeff) -> None:
        c = self.terms.get(lam, Fraction(0)) + coeff
        if c:
            self.terms[lam] = c
        else:
            self.terms.pop(lam, None)

    def __add__(self, other: "SymElement") -> "SymElement":
        if self.r != other.r:
            raise ValueError("r mismatch")
        out = SymElement(self.r, dict(self.terms))
        for lam, c in other.terms.items():
            out.add_term(lam, c)
        return out

    def scale(self, coeff) -> "SymElement":
        c = Fraction(coeff)
        if not c:
            return SymElement.zero(self.r)
        return SymElement(self.r, {lam: v * c for lam, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, SymElement) and self.r == other.r and self.terms == other.terms


def merge_triples(g: Triple, t: Triple, r: int) -> Triple:
    """Exponent sum of two triples at one site, normalized by x*y = z^r."""
    a, b, c = g
    i, j, k = t
    if c + k <= r - 1:
        return (a + i, b + j, c + k)
    return (a + i + 1, b + j + 1, c + k - r)


def mul_generator(g: Triple, x: SymElement) -> SymElement:
    """Multiply by the single-triple symmetric function m_g.

    For each term m_Lambda the product contributes m_{g Lambda} plus, for
    every distinct triple t of Lambda, the symmetric function whose index
    merges g into t.  Each output monomial is weighted by the multiplicity
    its new triple attains in the output index.
    """
    check_triple(g, x.r)
    out = SymElement.zero(x.r)
    for lam, coeff in x.terms.items():
        key = lam.add(g)
        out.add_term(key, coeff * key.mult(g))
        for t in lam.distinct():
            merged = merge_triples(g, t, x.r)
            key = lam.remove(t).add(merged)
            out.add_term(key, coeff * key.mult(merged))
    return out
