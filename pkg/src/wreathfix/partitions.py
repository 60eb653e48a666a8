"""Partitions, r-tuples of partitions, and tri-partitions.

Conventions used throughout the package:

* A partition is a weakly decreasing tuple of positive integers.
* Components 1..r-1 of an r-tuple may in addition carry parts of size 0
  ("zero parts").  Component 0 may not: a part of size j in component i
  corresponds to the exponent triple (j, 0, i), and (0, 0, 0) is not a
  legal triple.  Zero parts count toward the length of a component.
* Multiplicity views are indexed by part size j >= 0, where j = 0 reads
  the zero-part count (always 0 for component 0).
* A tri-partition is a multiset of triples (a, b, c) with a, b >= 0 and
  0 <= c <= r-1, excluding (0, 0, 0).  The triple (a, b, c) stands for the
  site monomial x^a y^b z^c and has weight r*(a+b) + 2c, which is the
  cohomological degree of the associated invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

Triple = tuple[int, int, int]


def check_triple(t: Triple, r: int) -> None:
    a, b, c = t
    if a < 0 or b < 0:
        raise ValueError(f"negative exponent in triple {t}")
    if not 0 <= c <= r - 1:
        raise ValueError(f"z-exponent {c} out of range for r={r}")
    if (a, b, c) == (0, 0, 0):
        raise ValueError("(0, 0, 0) is not a legal triple")


def triple_degree(t: Triple, r: int) -> int:
    a, b, c = t
    return r * (a + b) + 2 * c


@dataclass(frozen=True)
class PaddedPartition:
    """A partition padded with a number of size-0 parts."""

    parts: tuple[int, ...]
    zeros: int = 0

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"positive parts required, got {self.parts}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing, got {self.parts}")
        if self.zeros < 0:
            raise ValueError("zero count must be non-negative")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts) + self.zeros

    def mult(self, j: int) -> int:
        """Multiplicity of part size j, with j = 0 reading the zero count."""
        if j == 0:
            return self.zeros
        return self.parts.count(j)

    def all_parts(self) -> tuple[int, ...]:
        return self.parts + (0,) * self.zeros

    def add_part(self, j: int) -> "PaddedPartition":
        if j == 0:
            return PaddedPartition(self.parts, self.zeros + 1)
        return PaddedPartition(tuple(sorted(self.parts + (j,), reverse=True)), self.zeros)

    def remove_part(self, j: int) -> "PaddedPartition":
        if j == 0:
            if self.zeros == 0:
                raise ValueError("no zero part to remove")
            return PaddedPartition(self.parts, self.zeros - 1)
        if j not in self.parts:
            raise ValueError(f"no part {j} to remove")
        lst = list(self.parts)
        lst.remove(j)
        return PaddedPartition(tuple(lst), self.zeros)


EMPTY_COMPONENT = PaddedPartition(())


@dataclass(frozen=True)
class RTuple:
    """An r-tuple of partitions indexing the fixed-ring basis.

    Component 0 is an honest partition; components i >= 1 may carry zero
    parts.  The multiset of all parts (with their component index) is the
    complete invariant; two r-tuples compare equal iff r and all
    component multiplicities agree.
    """

    r: int
    comps: tuple[PaddedPartition, ...]

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be >= 1")
        if len(self.comps) != self.r:
            raise ValueError(f"expected {self.r} components, got {len(self.comps)}")
        if self.comps[0].zeros:
            raise ValueError("component 0 cannot carry zero parts")

    @classmethod
    def empty(cls, r: int) -> "RTuple":
        return cls(r, (EMPTY_COMPONENT,) * r)

    @classmethod
    def from_parts(cls, r: int, parts: dict[int, list[int]] | None = None) -> "RTuple":
        """Build from a map component -> list of part sizes (0 allowed for i >= 1)."""
        parts = parts or {}
        comps = []
        for i in range(r):
            sizes = sorted(parts.get(i, []), reverse=True)
            pos = tuple(p for p in sizes if p > 0)
            zeros = len(sizes) - len(pos)
            comps.append(PaddedPartition(pos, zeros))
        return cls(r, tuple(comps))

    @property
    def size(self) -> int:
        return sum(c.size for c in self.comps)

    @property
    def length(self) -> int:
        return sum(c.length for c in self.comps)

    def mult(self, i: int, j: int) -> int:
        return self.comps[i].mult(j)

    def add_part(self, i: int, j: int) -> "RTuple":
        comps = list(self.comps)
        comps[i] = comps[i].add_part(j)
        return RTuple(self.r, tuple(comps))

    def remove_part(self, i: int, j: int) -> "RTuple":
        comps = list(self.comps)
        comps[i] = comps[i].remove_part(j)
        return RTuple(self.r, tuple(comps))

    def part_types(self) -> list[tuple[int, int, int]]:
        """Distinct (component, size, multiplicity) triples present."""
        out = []
        for i, comp in enumerate(self.comps):
            for j in sorted(set(comp.all_parts()), reverse=True):
                out.append((i, j, comp.mult(j)))
        return out

    def sort_key(self):
        return tuple((c.parts, c.zeros) for c in self.comps)

    def __str__(self):
        body = "|".join(",".join(str(p) for p in c.all_parts()) for c in self.comps)
        return f"[{body}]"


def rtuple_degree(lam: RTuple) -> int:
    """Cohomological degree 2 * sum_i (r|lam_i| + i*l(lam_i)) of a basis index."""
    return 2 * sum(lam.r * c.size + i * c.length for i, c in enumerate(lam.comps))


def dominates(mu: RTuple, lam: RTuple) -> bool:
    """Whether mu <= lam: every part multiplicity of mu is at most lam's.

    Zero-part counts participate (index j = 0).
    """
    if mu.r != lam.r:
        raise ValueError(f"r mismatch: {mu.r} vs {lam.r}")
    for cm, cl in zip(mu.comps, lam.comps):
        if cm.zeros > cl.zeros:
            return False
        for j in set(cm.parts):
            if cm.parts.count(j) > cl.parts.count(j):
                return False
    return True


def canon_tripartition(lam: RTuple):
    """The tri-partition lam * (0,1,0)^|lam| whose class is the basis vector.

    Each part j of component i contributes the triple (j, 0, i); on top of
    those sits one (0, 1, 0) per unit of |lam|.
    """
    from .symfun import TriPartition

    triples = []
    for i, comp in enumerate(lam.comps):
        for j in comp.all_parts():
            triples.append((j, 0, i))
    triples.extend([(0, 1, 0)] * lam.size)
    return TriPartition.from_triples(lam.r, triples)


def partitions_of(n: int, max_part: int | None = None):
    """Weakly decreasing tuples of positive integers summing to n."""
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def _padded_partitions_by_cost(budget: int, allow_zeros: bool) -> list[list[PaddedPartition]]:
    """Group PaddedPartition by cost = size + length, up to the budget.

    A positive part j costs j + 1; a zero part costs 1.
    """
    groups: list[list[PaddedPartition]] = [[] for _ in range(budget + 1)]
    for zeros in range(budget + 1) if allow_zeros else (0,):
        for pos_cost in range(budget + 1 - zeros):
            for k in range(pos_cost // 2 + 1):
                if k == 0:
                    if pos_cost == 0:
                        groups[zeros].append(PaddedPartition((), zeros))
                    continue
                for parts in partitions_of(pos_cost - k):
                    if len(parts) == k:
                        groups[zeros + pos_cost].append(PaddedPartition(parts, zeros))
    return groups


def enumerate_fixed_basis(r: int, n: int) -> list[RTuple]:
    """All r-tuples with |lam| + l(lam) <= n, sorted by (degree, lex key).

    This is the canonical basis of the truncated fixed ring at level n.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    groups0 = _padded_partitions_by_cost(n, allow_zeros=False)
    groups1 = _padded_partitions_by_cost(n, allow_zeros=True) if r > 1 else groups0
    out: list[RTuple] = []
    acc: list[PaddedPartition] = []

    def rec(i: int, budget: int):
        if i == r:
            out.append(RTuple(r, tuple(acc)))
            return
        groups = groups0 if i == 0 else groups1
        for cost in range(budget + 1):
            for comp in groups[cost]:
                acc.append(comp)
                rec(i + 1, budget - cost)
                acc.pop()

    rec(0, n)
    out.sort(key=lambda t: (rtuple_degree(t), t.sort_key()))
    return out


def enumerate_betti_tuples(r: int, n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All r-tuples of ordinary partitions (no zero parts) with total size n."""
    if r < 1:
        raise ValueError("r must be >= 1")

    def split(total, k):
        if k == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in split(total - first, k - 1):
                yield (first,) + rest

    out = []
    for sizes in split(n, r):
        for combo in itertools.product(*[list(partitions_of(s)) for s in sizes]):
            out.append(combo)
    out.sort()
    return out


def fixed_to_betti_bijection(lam: RTuple, n: int) -> tuple[tuple[int, ...], ...]:
    """Explicit witness for |basis(r, n)| = |betti tuples(r, n)|.

    Every part gains 1 (zero parts become 1s) and component 0 is padded
    with enough extra 1s to reach total size n.
    """
    if lam.size + lam.length > n:
        raise ValueError(f"{lam} does not satisfy |lam| + l(lam) <= {n}")
    mus = []
    for comp in lam.comps:
        mus.append(tuple(p + 1 for p in comp.all_parts()))
    pad = n - lam.size - lam.length
    mus[0] = tuple(sorted(mus[0] + (1,) * pad, reverse=True))
    return tuple(mus)
