"""The level-n fixed ring as a truncation of the limit quotient.

Indices with |lam| + l(lam) > n are images of symmetric functions needing
more than n sites, hence vanish at level n.  Multiplication by the
surviving generators is the closed-form product followed by truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import RTuple, enumerate_fixed_basis, rtuple_degree
from .quotient import FixedElement, mul_gen_fixed

GradedDims = dict[int, int]


@dataclass
class TruncatedElement:
    element: FixedElement
    n: int

    def __post_init__(self):
        for lam in self.element.terms:
            if lam.size + lam.length > self.n:
                raise ValueError(f"{lam} exceeds truncation level {self.n}")


def truncate(x: FixedElement, n: int) -> TruncatedElement:
    """Drop every key with |lam| + l(lam) > n."""
    kept = FixedElement(x.r)
    for lam, coeff in x.terms.items():
        if lam.size + lam.length <= n:
            kept.add_term(lam, coeff)
    return TruncatedElement(kept, n)


def hilbert_series(r: int, n: int, k_max: int | None = None) -> GradedDims:
    """Graded dimensions of the level-n fixed ring, by basis counting.

    Returns {degree: dim} over even degrees; k_max caps the degree at
    2*k_max when given.
    """
    dims: GradedDims = {}
    for lam in enumerate_fixed_basis(r, n):
        d = rtuple_degree(lam)
        if k_max is not None and d > 2 * k_max:
            continue
        dims[d] = dims.get(d, 0) + 1
    return dims


def stable_dim(r: int, k: int) -> int:
    """Dimension of the degree-2k piece of the untruncated quotient.

    Counts r-tuples with sum_i (r|lam_i| + i l(lam_i)) = k; the level-n
    series agrees with this for all n >= 2k.
    """
    # weight of a part of size p in component i is rp + i, always >= 1
    from .partitions import PaddedPartition
    import itertools

    def comp_options(i):
        # all padded partitions of component i with weight sum <= k
        opts = {}
        if i == 0:
            per_part = [(rp_weight, p) for p in range(1, k + 1) if (rp_weight := r * p) <= k]
        else:
            per_part = [(rp_weight, p) for p in range(0, k + 1) if (rp_weight := r * p + i) <= k]

        def rec(budget, avail):
            yield ()
            for idx, (w, p) in enumerate(avail):
                if w <= budget:
                    for rest in rec(budget - w, avail[idx:]):
                        yield (p,) + rest

        for parts in rec(k, per_part):
            w = sum(r * p + i for p in parts)
            opts.setdefault(w, []).append(parts)
        return opts

    per_comp = [comp_options(i) for i in range(r)]
    count = 0
    for weights in itertools.product(*[list(o.keys()) for o in per_comp]):
        if sum(weights) == k:
            prod = 1
            for o, w in zip(per_comp, weights):
                prod *= len(o[w])
            count += prod
    return count


def mult_matrix(r: int, n: int, a: int, c: int) -> list[list[Fraction]]:
    """Matrix of multiplication by m_{(a,a,c)} on the level-n fixed ring.

    Rows and columns are indexed by enumerate_fixed_basis(r, n); column j
    holds the truncated product against basis vector j.
    """
    basis = enumerate_fixed_basis(r, n)
    index = {lam: i for i, lam in enumerate(basis)}
    mat = [[Fraction(0)] * len(basis) for _ in basis]
    for j, lam in enumerate(basis):
        prod = truncate(mul_gen_fixed(a, c, lam), n)
        for nu, coeff in prod.element.terms.items():
            mat[index[nu]][j] = coeff
    return mat
