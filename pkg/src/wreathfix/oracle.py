"""Brute-force cross check by exact linear algebra in n sites.

Everything here works with honest polynomials in the n-site ring with one
relation x_i y_i = z_i^r per site.  Site monomials are kept in the normal
form min(x-exp, y-exp) = 0 with an unbounded z-exponent, which gives a
genuine monomial basis of each site factor.  Invariants are spanned by
orbit sums of site-monomial multisets; graded dimensions of the fixed ring
come out of exact row reduction, with no input from the rewriting engine
or the closed forms.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .partitions import RTuple, canon_tripartition, rtuple_degree
from .symfun import TriPartition

Site = tuple[int, int, int]  # (x-exp, y-exp, z-exp), min(x, y) = 0, z unbounded
Orbit = tuple[Site, ...]  # nonzero sites, sorted descending; empty sites implicit

DEFAULT_CAP = 200_000


class OracleCapExceeded(RuntimeError):
    """Raised when a monomial basis outgrows the configured cap."""


def monomial_cap() -> int:
    env = os.environ.get("HW_CAP_MONOMIALS")
    return int(env) if env else DEFAULT_CAP


def normalize_site(a: int, b: int, c: int, r: int) -> Site:
    """Trade x*y pairs for z^r until one of the x, y exponents vanishes."""
    m = min(a, b)
    return (a - m, b - m, c + m * r)


def site_degree(site: Site, r: int) -> int:
    a, b, c = site
    return r * (a + b) + 2 * c


def site_weight(site: Site) -> int:
    return site[0] - site[1]


def orbit_degree(orbit: Orbit, r: int) -> int:
    return sum(site_degree(s, r) for s in orbit)


def orbit_weight(orbit: Orbit) -> int:
    return sum(site_weight(s) for s in orbit)


class OraclePolynomial:
    """A symmetric polynomial stored as rational coefficients on orbit sums."""

    __slots__ = ("r", "n", "terms")

    def __init__(self, r: int, n: int, terms: dict[Orbit, Fraction] | None = None):
        self.r = r
        self.n = n
        self.terms = terms or {}

    def add_term(self, orbit: Orbit, coeff) -> None:
        c = self.terms.get(orbit, Fraction(0)) + coeff
        if c:
            self.terms[orbit] = c
        else:
            self.terms.pop(orbit, None)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, OraclePolynomial)
            and (self.r, self.n) == (other.r, other.n)
            and self.terms == other.terms
        )


def specialize(lam: TriPartition, n: int) -> OraclePolynomial:
    """The monomial symmetric function m_lam evaluated in n sites.

    Each exponent triple is put in site normal form; the result is a single
    orbit sum, or zero when the index needs more than n distinct sites.
    """
    out = OraclePolynomial(lam.r, n)
    if lam.length > n:
        return out
    sites = tuple(sorted((normalize_site(a, b, c, lam.r) for a, b, c in lam.triples), reverse=True))
    out.add_term(sites, Fraction(1))
    return out


def mul_site(g: Site, x: OraclePolynomial) -> OraclePolynomial:
    """Multiply by the orbit sum of a single site monomial.

    Placing g on an occupied site merges exponents (with normalization);
    placing it on an empty site appends it.  Each output orbit is weighted
    by the multiplicity of the touched site type in the output.
    """
    r, n = x.r, x.n
    out = OraclePolynomial(r, n)
    for orbit, coeff in x.terms.items():
        if len(orbit) < n:
            key = tuple(sorted(orbit + (g,), reverse=True))
            out.add_term(key, coeff * key.count(g))
        for t in sorted(set(orbit), reverse=True):
            merged = normalize_site(g[0] + t[0], g[1] + t[1], g[2] + t[2], r)
            rest = list(orbit)
            rest.remove(t)
            key = tuple(sorted(rest + [merged], reverse=True))
            out.add_term(key, coeff * key.count(merged))
    return out


def site_monomials_up_to(r: int, degree: int):
    """All normal-form site monomials of degree between 1 and the bound."""
    out = []
    for c in range(degree // 2 + 1):
        rest = degree - 2 * c
        out.append((0, 0, c))
        for a in range(1, rest // r + 1):
            out.append((a, 0, c))
            out.append((0, a, c))
    return [s for s in out if s != (0, 0, 0) and site_degree(s, r) <= degree]


def invariant_basis(r: int, n: int, degree: int, weight: int, cap: int | None = None) -> list[Orbit]:
    """Orbit-sum basis of the degree/weight piece of the invariant ring."""
    cap = cap if cap is not None else monomial_cap()
    sites = sorted(site_monomials_up_to(r, degree), reverse=True)
    out: list[Orbit] = []

    def rec(start: int, budget: int, wt: int, stack: list[Site]):
        if len(out) > cap:
            raise OracleCapExceeded(f"more than {cap} monomial orbits at degree {degree}")
        if budget == 0 and wt == 0:
            out.append(tuple(stack))
        if len(stack) == n:
            return
        for idx in range(start, len(sites)):
            s = sites[idx]
            d = site_degree(s, r)
            if d > budget:
                continue
            stack.append(s)
            rec(idx, budget - d, wt - site_weight(s), stack)
            stack.pop()

    rec(0, degree, weight, [])
    return sorted(out, reverse=True)


class SparseEchelon:
    """Incremental exact row reduction over the rationals.

    Rows are sparse mappings column -> coefficient; pivots are chosen as
    the smallest column index, so ranks are independent of insertion order.
    """

    def __init__(self):
        self.pivots: dict = {}  # lead column -> normalized row

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        while row:
            lead = min(row)
            pivot = self.pivots.get(lead)
            if pivot is None:
                return row
            factor = row[lead]
            for col, val in pivot.items():
                cur = row.get(col, Fraction(0)) - factor * val
                if cur:
                    row[col] = cur
                else:
                    row.pop(col, None)
        return row

    def add_row(self, row: dict) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        lead = min(row)
        inv = Fraction(1) / row[lead]
        self.pivots[lead] = {col: val * inv for col, val in row.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def generator_triples(r: int, max_degree: int):
    """Exponent triples (a, b, c) with a != b, c < r, of bounded degree."""
    out = []
    for a in range(max_degree // r + 1):
        for b in range(max_degree // r + 1):
            if a == b:
                continue
            for c in range(r):
                if r * (a + b) + 2 * c <= max_degree:
                    out.append((a, b, c))
    return sorted(out, reverse=True)


def ideal_rows(r: int, n: int, degree: int, cap: int | None = None):
    """Products (fixed-ideal generator) * (invariant orbit) of given degree.

    These span the degree piece of the ideal cutting out the torus-fixed
    subscheme, in the torus-weight-0 part.
    """
    rows = []
    for g in generator_triples(r, degree):
        gdeg = r * (g[0] + g[1]) + 2 * g[2]
        gwt = g[0] - g[1]
        gsite = normalize_site(*g, r)
        for orbit in invariant_basis(r, n, degree - gdeg, -gwt, cap):
            base = OraclePolynomial(r, n, {orbit: Fraction(1)})
            rows.append(mul_site(gsite, base))
    return rows


def oracle_hilbert(r: int, n: int, k_max: int, cap: int | None = None) -> dict[int, int]:
    """Graded dimensions of the level-n fixed ring by exact row reduction.

    For each even degree: dimension of the weight-0 invariants minus the
    rank of the ideal piece inside them.
    """
    dims: dict[int, int] = {}
    for k in range(k_max + 1):
        degree = 2 * k
        cols = invariant_basis(r, n, degree, 0, cap)
        if not cols:
            continue
        col_index = {orbit: i for i, orbit in enumerate(cols)}
        ech = SparseEchelon()
        for poly in ideal_rows(r, n, degree, cap):
            row = {col_index[o]: c for o, c in poly.terms.items()}
            ech.add_row(row)
        dim = len(cols) - ech.rank
        if dim:
            dims[degree] = dim
    return dims


def oracle_reduce(lam: TriPartition, r: int, n: int, cap: int | None = None) -> dict[RTuple, Fraction]:
    """Coordinates of a monomial symmetric function over the basis images.

    Solves specialize(lam) = sum coords * specialize(canonical) modulo the
    fixed-point ideal at level n, by exact elimination.  Raises if the
    basis images are dependent at this level (n too small).
    """
    if lam.r != r:
        raise ValueError("r mismatch")
    degree = lam.degree
    weight = lam.torus_weight
    target = specialize(lam, n)
    if weight != 0:
        # outside weight 0 the fixed ring vanishes: valid iff target is in the ideal
        cols_w = invariant_basis(r, n, degree, weight, cap)
        col_index = {o: i for i, o in enumerate(cols_w)}
        ech = SparseEchelon()
        for g in generator_triples(r, degree):
            gdeg = r * (g[0] + g[1]) + 2 * g[2]
            gwt = g[0] - g[1]
            gsite = normalize_site(*g, r)
            for orbit in invariant_basis(r, n, degree - gdeg, weight - gwt, cap):
                poly = mul_site(gsite, OraclePolynomial(r, n, {orbit: Fraction(1)}))
                ech.add_row({col_index[o]: c for o, c in poly.terms.items()})
        residual = ech.reduce({col_index[o]: c for o, c in target.terms.items()})
        if residual:
            raise ArithmeticError(f"{lam} has torus weight {weight} but is not in the ideal")
        return {}
    cols = invariant_basis(r, n, degree, 0, cap)
    col_index = {o: i for i, o in enumerate(cols)}
    ech = SparseEchelon()
    for poly in ideal_rows(r, n, degree, cap):
        ech.add_row({col_index[o]: c for o, c in poly.terms.items()})

    basis = [mu for mu in _canonical_of_degree(r, degree) if mu.size + mu.length <= n]
    # echelon of the basis images in the quotient space, tracking which
    # combination of basis vectors produced each pivot row
    pivots: dict[int, tuple[dict, dict[RTuple, Fraction]]] = {}

    def eliminate(row: dict, tag: dict[RTuple, Fraction]):
        while row:
            lead = min(row)
            hit = pivots.get(lead)
            if hit is None:
                return row, tag
            prow, ptag = hit
            factor = row[lead]
            for col, val in prow.items():
                cur = row.get(col, Fraction(0)) - factor * val
                if cur:
                    row[col] = cur
                else:
                    row.pop(col, None)
            for mu, val in ptag.items():
                cur = tag.get(mu, Fraction(0)) - factor * val
                if cur:
                    tag[mu] = cur
                else:
                    tag.pop(mu, None)
        return row, tag

    for mu in basis:
        img = specialize(canon_tripartition(mu), n)
        row = ech.reduce({col_index[o]: c for o, c in img.terms.items()})
        row, tag = eliminate(row, {mu: Fraction(1)})
        if not row:
            raise ArithmeticError(f"basis image of {mu} is dependent at level n={n}: singular system")
        lead = min(row)
        inv = Fraction(1) / row[lead]
        pivots[lead] = (
            {col: val * inv for col, val in row.items()},
            {m: val * inv for m, val in tag.items()},
        )
    t = ech.reduce({col_index[o]: c for o, c in target.terms.items()})
    t, tag = eliminate(t, {})
    if t:
        raise ArithmeticError(f"{lam}: residual outside the basis-image span (n={n} too small?)")
    return {mu: -c for mu, c in tag.items() if c}


def _canonical_of_degree(r: int, degree: int):
    from .partitions import enumerate_fixed_basis

    if degree % 2:
        return
    # every index of this degree satisfies |lam| + l(lam) <= degree
    for mu in enumerate_fixed_basis(r, degree):
        if rtuple_degree(mu) == degree:
            yield mu
