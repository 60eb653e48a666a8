"""Reduction modulo the fixed-point ideal to the canonical basis.

The ideal J is generated by the single-triple functions m_{(a,b,c)} with
a != b.  The quotient has the canonical basis m_{lam (0,1,0)^{|lam|}}
indexed by r-tuples of partitions.  Two independent routes are provided:

* ``reduce_mod_J``: a rewriting engine built only on the product rule and
  the vanishing of the ideal generators.  Every class with nonzero torus
  weight dies; every other index is rewritten by one of two pivots:

  - if some triple has b > a (and is not the reservoir triple (0,1,0)),
    that triple itself is an ideal generator; expanding
    m_{(a,b,c)} * m_{Lambda - (a,b,c)} expresses m_Lambda through strictly
    shorter indices.
  - otherwise every non-reservoir triple satisfies a >= b and the class of
    triples stays closed under the moves below; picking a triple with
    b >= 1 and expanding m_{(a,b-1,c)} * m_{(Lambda - t)(0,1,0)} lowers
    (sum of b's, number of non-reservoir triples) lexicographically.

  Both pivots solve for the target term of the expansion, so reduction is
  exact rational arithmetic throughout.  Single-index reductions are
  memoized per (r, index).

* ``expand_lemma4`` / ``mul_gen_fixed``: closed-form factorial sums that
  never touch the rewriting engine.  Agreement between the two routes is
  part of the acceptance suite.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .coeffs import between, coeff_d, pq
from .partitions import RTuple, Triple, canon_tripartition, check_triple
from .symfun import SymElement, TriPartition, merge_triples, mul_generator

RESERVOIR: Triple = (0, 1, 0)


@dataclass
class FixedElement:
    """A finite rational combination of canonical basis vectors."""

    r: int
    terms: dict[RTuple, Fraction] = field(default_factory=dict)

    @classmethod
    def zero(cls, r: int) -> "FixedElement":
        return cls(r, {})

    @classmethod
    def unit(cls, lam: RTuple, coeff=1) -> "FixedElement":
        c = Fraction(coeff)
        return cls(lam.r, {lam: c} if c else {})

    def add_term(self, lam: RTuple, coeff) -> None:
        c = self.terms.get(lam, Fraction(0)) + coeff
        if c:
            self.terms[lam] = c
        else:
            self.terms.pop(lam, None)

    def add_scaled(self, other: "FixedElement", coeff=1) -> None:
        for lam, c in other.terms.items():
            self.add_term(lam, c * coeff)

    def scale(self, coeff) -> "FixedElement":
        c = Fraction(coeff)
        if not c:
            return FixedElement.zero(self.r)
        return FixedElement(self.r, {k: v * c for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FixedElement) and self.r == other.r and self.terms == other.terms
        )

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam in sorted(self.terms, key=lambda t: (t.sort_key(),)):
            bits.append(f"{self.terms[lam]} * {lam}")
        return "  +  ".join(bits)


def as_canonical(lam: TriPartition) -> RTuple | None:
    """The basis index of a canonical tri-partition, or None.

    Canonical means: every triple is a part triple (j, 0, i) or the
    reservoir triple (0, 1, 0), and the reservoir multiplicity equals the
    total part size.
    """
    parts: dict[int, list[int]] = {}
    reservoir = 0
    total = 0
    for a, b, c in lam.triples:
        if (a, b, c) == RESERVOIR:
            reservoir += 1
        elif b == 0:
            parts.setdefault(c, []).append(a)
            total += a
        else:
            return None
    if reservoir != total:
        return None
    return RTuple.from_parts(lam.r, parts)


_REDUCE_CACHE: dict[tuple[int, tuple[Triple, ...]], dict[RTuple, Fraction]] = {}


def _reduce_key(lam: TriPartition) -> dict[RTuple, Fraction]:
    cached = _REDUCE_CACHE.get((lam.r, lam.triples))
    if cached is not None:
        return cached
    out = _reduce_key_uncached(lam)
    _REDUCE_CACHE[(lam.r, lam.triples)] = out
    return out


def _pivot_solve(lam: TriPartition, expansion: SymElement) -> dict[RTuple, Fraction]:
    """Solve coeff * m_lam = -(other terms) inside a vanishing expansion."""
    pivot_coeff = expansion.terms.get(lam)
    if not pivot_coeff:
        raise AssertionError(f"pivot expansion for {lam} lost its target term")
    acc: dict[RTuple, Fraction] = {}
    for key, coeff in expansion.terms.items():
        if key == lam:
            continue
        scale = -coeff / pivot_coeff
        for idx, val in _reduce_key(key).items():
            new = acc.get(idx, Fraction(0)) + scale * val
            if new:
                acc[idx] = new
            else:
                acc.pop(idx, None)
    return acc


def _reduce_key_uncached(lam: TriPartition) -> dict[RTuple, Fraction]:
    if lam.torus_weight != 0:
        return {}
    canonical = as_canonical(lam)
    if canonical is not None:
        return {canonical: Fraction(1)}
    heavy = [t for t in lam.distinct() if t[1] > t[0] and t != RESERVOIR]
    if heavy:
        # the triple itself generates the ideal; the expansion's main term
        # is m_lam and every correction is one triple shorter
        target = max(heavy)
        rest = SymElement.monomial(lam.remove(target))
        return _pivot_solve(lam, mul_generator(target, rest))
    # all non-reservoir triples have a >= b; pick one with b >= 1
    movable = [t for t in lam.distinct() if t != RESERVOIR and t[1] >= 1]
    if not movable:
        raise AssertionError(f"{lam} has torus weight 0 but no reduction move")
    a, b, c = max(movable, key=lambda t: (t[1], t[0], t[2]))
    rest = SymElement.monomial(lam.remove((a, b, c)).add(RESERVOIR))
    return _pivot_solve(lam, mul_generator((a, b - 1, c), rest))


def reduce_mod_J(x: SymElement) -> FixedElement:
    """Image of a symmetric-function element in the canonical basis."""
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 100000))
    out = FixedElement.zero(x.r)
    for lam, coeff in x.terms.items():
        for idx, val in _reduce_key(lam).items():
            out.add_term(idx, coeff * val)
    return out


def reduce_tripartition(lam: TriPartition) -> FixedElement:
    return reduce_mod_J(SymElement.monomial(lam))


def clear_cache() -> None:
    _REDUCE_CACHE.clear()


# --- closed forms ---------------------------------------------------------


def expand_lemma4(a: int, b: int, c: int, lam: RTuple) -> FixedElement:
    """Closed-form reduction of m_{(a,b,c) lam (0,1,0)^{|lam|+a-b}}.

    For b = 0 the index is already canonical.  For a >= b >= 1 the result
    is the coeff_d expansion over mu <= lam.  For a < b the head triple is
    itself an ideal generator, so expanding m_{(a,b,c)} * m_{lam (0,1,0)^E}
    expresses the index through heads of smaller |lam| + l(lam) + a - b;
    that descent bottoms out in the a >= b range.  No rewriting engine is
    involved on any branch.
    """
    r = lam.r
    if not 0 <= c <= r - 1:
        raise ValueError(f"c={c} out of range for r={r}")
    if a < 0 or b < 0 or (a, b, c) == (0, 0, 0):
        raise ValueError(f"illegal head triple ({a},{b},{c})")
    if lam.size + a - b < 0:
        raise ValueError(f"reservoir exponent |lam|+a-b = {lam.size + a - b} is negative")
    if (a, b, c) == RESERVOIR:
        return FixedElement.unit(lam)
    if b == 0:
        return FixedElement.unit(lam.add_part(c, a))
    if a >= b:
        out = FixedElement.zero(r)
        for mu in between(RTuple.empty(r), lam):
            d = pq(c, lam, mu)
            if lam.length - mu.length > b + d.p:
                continue
            coeff = coeff_d(a, b, c, lam, mu)
            if coeff:
                out.add_term(mu.add_part(d.q, lam.size - mu.size + a + d.p), Fraction(coeff))
        return out
    # a < b: the expansion of m_{(a,b,c)} * m_{lam (0,1,0)^E} vanishes
    out = FixedElement.zero(r)
    if lam.size + a - b >= 1:
        out.add_scaled(expand_lemma4(a, b + 1, c, lam), -1)
    for i, j, _ in lam.part_types():
        stripped = lam.remove_part(i, j)
        merged = merge_triples((a, b, c), (j, 0, i), r)
        out.add_scaled(expand_lemma4(*merged, stripped), -1)
    return out


def _merged_mult(head: Triple, lam: RTuple) -> int:
    """Multiplicity the head triple attains inside head * lam * reservoir."""
    a, b, c = head
    if head == RESERVOIR:
        raise AssertionError("reservoir head should have been folded")
    if b == 0:
        return lam.mult(c, a) + 1
    return 1


def mul_gen_fixed(a: int, c: int, lam: RTuple) -> FixedElement:
    """Closed form of the product m_{(a,a,c)} * m_{lam (0,1,0)^{|lam|}}.

    One product-rule step splits the product into head expansions with
    deficit at most one, each of which has a closed form.
    """
    r = lam.r
    check_triple((a, a, c), r)
    out = FixedElement.zero(r)
    head_mult = lam.mult(c, 0) + 1 if a == 0 else 1
    out.add_scaled(expand_lemma4(a, a, c, lam), head_mult)
    if lam.size >= 1:
        out.add_scaled(expand_lemma4(a, a + 1, c, lam), 1)
    for i, j, _ in lam.part_types():
        stripped = lam.remove_part(i, j)
        merged = merge_triples((a, a, c), (j, 0, i), r)
        out.add_scaled(expand_lemma4(*merged, stripped), _merged_mult(merged, stripped))
    return out


def filtration_holds(a: int, c: int, lam: RTuple) -> bool:
    """Every output key nu satisfies |nu| + l(nu) >= |lam| + l(lam)."""
    bound = lam.size + lam.length
    prod = mul_gen_fixed(a, c, lam)
    return all(nu.size + nu.length >= bound for nu in prod.terms)
