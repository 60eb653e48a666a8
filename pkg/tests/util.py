"""Shared enumeration helpers for the test suite."""

from collections import Counter
from itertools import combinations

from wreathfix.oracle import normalize_site
from wreathfix.symfun import TriPartition


def distinct_permutations(items):
    counts = Counter(items)
    k = len(items)

    def rec(stack):
        if len(stack) == k:
            yield tuple(stack)
            return
        for item in sorted(counts):
            if counts[item]:
                counts[item] -= 1
                stack.append(item)
                yield from rec(stack)
                stack.pop()
                counts[item] += 1

    yield from rec([])


def tripartitions_of_weight(r, w, weight0_only=False):
    """All tri-partitions of total weight w (optionally torus weight 0)."""
    triples = []
    for a in range(w // r + 1):
        for b in range(w // r + 1):
            for c in range(r):
                if (a, b, c) != (0, 0, 0) and r * (a + b) + 2 * c <= w:
                    triples.append((a, b, c))
    triples.sort(reverse=True)
    out = []

    def rec(start, budget, tw, stack):
        if budget == 0:
            if not weight0_only or tw == 0:
                out.append(TriPartition.from_triples(r, tuple(stack)))
            return
        for idx in range(start, len(triples)):
            t = triples[idx]
            d = r * (t[0] + t[1]) + 2 * t[2]
            if d > budget:
                continue
            stack.append(t)
            rec(idx, budget - d, tw + t[0] - t[1], stack)
            stack.pop()

    rec(0, w, 0, [])
    return out


def tripartitions_up_to(r, w_max, weight0_only=False):
    out = []
    for w in range(w_max + 1):
        out.extend(tripartitions_of_weight(r, w, weight0_only))
    return out


def expand_full(poly, r, n):
    """Orbit-sum polynomial -> explicit site-assignment monomial dict."""
    out = {}
    for orbit, coeff in poly.terms.items():
        k = len(orbit)
        for positions in combinations(range(n), k):
            for arrangement in distinct_permutations(orbit):
                mono = [(0, 0, 0)] * n
                for pos, site in zip(positions, arrangement):
                    mono[pos] = site
                key = tuple(mono)
                out[key] = out.get(key, 0) + coeff
    return {k: v for k, v in out.items() if v}


def multiply_full(mono_poly_a, mono_poly_b, r):
    """Product of two explicit site-assignment polynomials, normalized."""
    out = {}
    for sa, ca in mono_poly_a.items():
        for sb, cb in mono_poly_b.items():
            merged = tuple(
                normalize_site(xa + xb, ya + yb, za + zb, r)
                for (xa, ya, za), (xb, yb, zb) in zip(sa, sb)
            )
            out[merged] = out.get(merged, 0) + ca * cb
    return {k: v for k, v in out.items() if v}
