"""Closed-form coefficients and the combinatorial identities behind them.

The reduction of a product m_{(a,b,c)} * m_{lam (0,1,0)^k} redistributes
z-weight between components in quanta of r.  The Euclidean pair (P, Q)
tracks how many overflows occur and which component receives the new part;
the coefficient functions below evaluate the resulting factorial products
exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .partitions import RTuple, dominates


@dataclass(frozen=True)
class PQ:
    p: int
    q: int


def pq(c: int, lam: RTuple, mu: RTuple) -> PQ:
    """Euclidean division sum_i i*(l(lam_i) - l(mu_i)) + c = p*r + q, 0 <= q < r."""
    if lam.r != mu.r:
        raise ValueError("r mismatch")
    if not 0 <= c <= lam.r - 1:
        raise ValueError(f"c={c} out of range for r={lam.r}")
    lhs = sum(i * (cl.length - cm.length) for i, (cl, cm) in enumerate(zip(lam.comps, mu.comps))) + c
    if lhs < 0:
        raise ValueError(f"negative overflow sum {lhs}: mu is not below lam")
    p, q = divmod(lhs, lam.r)
    return PQ(p, q)


def coeff_d(a: int, b: int, c: int, lam: RTuple, mu: RTuple) -> int:
    """Coefficient of the mu-labelled basis key in the reduction of
    m_{(a,b,c) lam (0,1,0)^{|lam|+a-b}}, for a >= b >= 1.

    Counts signed elimination orders: the parts of lam - mu are stripped in
    some sequence interleaved with b + P "pivot" steps, and an order is
    admissible unless it ends with an overflowing strip that has no pivot
    left to absorb it.  Whether the final strip overflows depends only on
    its component k: it does exactly when k > Q.
    """
    if not (a >= b >= 1):
        raise ValueError(f"need a >= b >= 1, got a={a}, b={b}")
    if not dominates(mu, lam):
        raise ValueError("mu must be dominated by lam")
    d = pq(c, lam, mu)
    strips = []  # (component, size, count) of removed parts
    for i, (cl, cm) in enumerate(zip(lam.comps, mu.comps)):
        for j in sorted(set(cl.all_parts()), reverse=True):
            n = cl.mult(j) - cm.mult(j)
            if n:
                strips.append((i, j, n))
    big = b + d.p
    length_drop = sum(n for _, _, n in strips)
    if length_drop > big:
        raise ValueError(f"l(lam) - l(mu) = {length_drop} exceeds b + P = {big}")
    s = lam.size - mu.size + a + d.p
    beta = mu.mult(d.q, s)
    sign = -1 if (b + d.p) % 2 else 1
    if length_drop == 0:
        return sign * (beta + 1)
    waits = big - length_drop
    denom = 1
    for _, _, n in strips:
        denom *= math.factorial(n)
    low = sum(n for k, _, n in strips if k <= d.q)      # final strip would not overflow
    high = length_drop - low                            # final strip would overflow
    count = math.comb(big, waits) * low + (math.comb(big - 1, waits - 1) * high if waits >= 1 else 0)
    num = (beta + 1) * count * math.factorial(length_drop - 1)
    if num % denom:
        raise AssertionError(f"non-integer coefficient for {lam} -> {mu}")
    return sign * (num // denom)


def f_coeff(mu: RTuple, nu: RTuple, x: int) -> Fraction:
    """The factorial ratio f_nu^mu(x), exact.

    f = (x-|nu|)! * (x-|mu|+1) / ((x-|nu|-l(nu)+l(mu)+1)! * prod (gamma-beta)!)
    """
    if not dominates(mu, nu):
        raise ValueError("mu must be dominated by nu")
    top = x - nu.size
    bot = x - nu.size - nu.length + mu.length + 1
    if top < 0 or bot < 0:
        raise ValueError(f"negative factorial argument for x={x}")
    denom = math.factorial(bot)
    for cn, cm in zip(nu.comps, mu.comps):
        denom *= math.factorial(cn.zeros - cm.zeros)
        for j in set(cn.parts):
            denom *= math.factorial(cn.parts.count(j) - cm.parts.count(j))
    return Fraction(math.factorial(top) * (x - mu.size + 1), denom)


def f_coeff_or_zero(mu: RTuple, nu: RTuple, x: int) -> Fraction:
    """f_nu^mu(x) extended by 1/(negative)! = 0 in the denominator slot."""
    bot = x - nu.size - nu.length + mu.length + 1
    if bot < 0:
        return Fraction(0)
    return f_coeff(mu, nu, x)


def between(mu: RTuple, lam: RTuple):
    """All nu with mu <= nu <= lam in the multiplicity order."""
    import itertools

    slots = []  # (component, size, low, high)
    for i, (cl, cm) in enumerate(zip(lam.comps, mu.comps)):
        for j in sorted(set(cl.all_parts()), reverse=True):
            slots.append((i, j, cm.mult(j), cl.mult(j)))
    ranges = [range(low, high + 1) for _, _, low, high in slots]
    for counts in itertools.product(*ranges):
        parts: dict[int, list[int]] = {}
        for (i, j, _, _), n in zip(slots, counts):
            parts.setdefault(i, []).extend([j] * n)
        yield RTuple.from_parts(lam.r, parts)


def check_lemma2(mu: RTuple, nu: RTuple, x: int) -> bool:
    """f(x+1) - f(x) = sum over single-part extensions mu + j@i below nu."""
    if not dominates(mu, nu):
        raise ValueError("mu must be dominated by nu")
    lhs = f_coeff(mu, nu, x + 1) - f_coeff(mu, nu, x)
    rhs = Fraction(0)
    for i in range(nu.r):
        for j in sorted(set(nu.comps[i].all_parts())):
            ext = mu.add_part(i, j)
            if dominates(ext, nu):
                rhs += f_coeff(ext, nu, x)
    return lhs == rhs


def check_lemma3(lam: RTuple, mu: RTuple, k: int) -> bool:
    """Alternating f-sum over mu <= nu <= lam telescopes to a factorial ratio."""
    if not dominates(mu, lam):
        raise ValueError("mu must be dominated by lam")
    if k < lam.length - mu.length:
        raise ValueError("k too small")
    lhs = Fraction(0)
    for nu in between(mu, lam):
        sign = -1 if (nu.length + lam.length) % 2 else 1
        outer = Fraction(
            math.factorial((lam.size + lam.length) - (nu.size + nu.length)),
            math.factorial(lam.size - nu.size) * _mult_factorial(lam, nu),
        )
        lhs += sign * f_coeff_or_zero(mu, nu, k + lam.size) * outer
    rhs = Fraction(
        math.factorial(k),
        math.factorial(k - (lam.length - mu.length)) * _mult_factorial(lam, mu),
    )
    return lhs == rhs


def _mult_factorial(lam: RTuple, mu: RTuple) -> int:
    """prod over (i, j) of (mult_lam(i,j) - mult_mu(i,j))!"""
    out = 1
    for cl, cm in zip(lam.comps, mu.comps):
        out *= math.factorial(cl.zeros - cm.zeros)
        for j in set(cl.parts):
            out *= math.factorial(cl.parts.count(j) - cm.parts.count(j))
    return out


def check_multinomial(n_map: dict) -> bool:
    """sum_ij of (N-1)!/((n_ij - 1)! prod others!) equals N!/prod n_ij! up to N.

    Both sides evaluated literally; entries with n_ij = 0 contribute nothing
    to the left side.
    """
    counts = [n for n in n_map.values() if n]
    if not counts or any(n < 0 for n in n_map.values()):
        raise ValueError("need non-negative entries, at least one positive")
    total = sum(counts)
    denom = 1
    for n in counts:
        denom *= math.factorial(n)
    lhs = Fraction(0)
    for idx, n in enumerate(counts):
        others = 1
        for jdx, m in enumerate(counts):
            others *= math.factorial(m - 1 if jdx == idx else m)
        lhs += Fraction(math.factorial(total - 1), others)
    return lhs == Fraction(math.factorial(total), denom)
