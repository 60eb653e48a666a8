from fractions import Fraction

import pytest
from util import expand_full, multiply_full, tripartitions_up_to

from wreathfix.oracle import specialize
from wreathfix.partitions import triple_degree
from wreathfix.symfun import SymElement, TriPartition, mul_generator, tri_degree


def T(r, *triples):
    return TriPartition.from_triples(r, triples)


def terms_of(x):
    return {k.triples: v for k, v in x.terms.items()}


def test_mul_generator_examples():
    # empty index: a single new triple, no corrections
    out = mul_generator((2, 1, 0), SymElement.monomial(TriPartition.empty(2)))
    assert terms_of(out) == {((2, 1, 0),): 1}

    # z-overflow branch for r = 2
    out = mul_generator((0, 0, 1), SymElement.monomial(T(2, (1, 0, 1))))
    assert terms_of(out) == {((1, 0, 1), (0, 0, 1)): 1, ((2, 1, 0),): 1}

    # (sum y_i)^2 = sum y_i^2 + 2 sum_{i<j} y_i y_j
    out = mul_generator((0, 1, 0), SymElement.monomial(T(1, (0, 1, 0))))
    assert terms_of(out) == {((0, 1, 0), (0, 1, 0)): 2, ((0, 2, 0),): 1}


def test_tri_degree():
    for r in (1, 2, 3):
        for a in range(3):
            for c in range(r):
                if (a, c) == (0, 0):
                    continue
                assert tri_degree(T(r, (a, a, c))) == 2 * (r * a + c)
    assert tri_degree(T(3, (0, 1, 0))) == 3


def test_mul_generator_rejects_bad_triple():
    with pytest.raises(ValueError):
        mul_generator((0, 0, 2), SymElement.monomial(TriPartition.empty(2)))
    with pytest.raises(ValueError):
        mul_generator((0, 0, 0), SymElement.monomial(TriPartition.empty(2)))


def test_degree_and_length_discipline():
    for r in (1, 2, 3):
        for lam in tripartitions_up_to(r, 8):
            for g in [(1, 0, 0), (0, 1, 0), (1, 1, 0)] + ([(0, 0, 1)] if r > 1 else []):
                out = mul_generator(g, SymElement.monomial(lam))
                want = triple_degree(g, r) + lam.degree
                for key in out.terms:
                    assert key.degree == want
                    assert key.length in (lam.length, lam.length + 1)


def test_generator_products_commute():
    gens = {1: [(1, 0, 0), (0, 1, 0), (1, 1, 0), (2, 1, 0)],
            2: [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (2, 0, 1)],
            3: [(0, 1, 0), (0, 0, 2), (1, 1, 1)]}
    for r, pool in gens.items():
        for g in pool:
            for h in pool:
                if triple_degree(g, r) + triple_degree(h, r) > 12:
                    continue
                one = SymElement.monomial(TriPartition.empty(r))
                gh = mul_generator(g, mul_generator(h, one))
                hg = mul_generator(h, mul_generator(g, one))
                assert gh == hg, (g, h, r)


def test_product_rule_against_explicit_polynomials():
    """Specializing both sides to l(lam)+1 sites gives equal polynomials.

    Ground truth here is full expansion into site assignments; kept to
    short indices so the expansions stay tiny.  The broader sweep below
    compares at the orbit level against the independent site product.
    """
    checked = 0
    for r in (1, 2, 3):
        lams = [t for t in tripartitions_up_to(r, 8) if t.length <= 3]
        gens = [t.triples[0] for t in tripartitions_up_to(r, 8) if t.length == 1]
        for lam in lams:
            n = lam.length + 1
            lam_full = expand_full(specialize(lam, n), r, n)
            for g in gens:
                if triple_degree(g, r) + lam.degree > 8:
                    continue
                product = mul_generator(g, SymElement.monomial(lam))
                lhs = {}
                for key, coeff in product.terms.items():
                    for mono, c in expand_full(specialize(key, n), r, n).items():
                        lhs[mono] = lhs.get(mono, 0) + coeff * c
                lhs = {k: v for k, v in lhs.items() if v}
                g_full = expand_full(specialize(T(r, g), n), r, n)
                rhs = multiply_full(g_full, lam_full, r)
                assert lhs == rhs, (r, g, lam.triples)
                checked += 1
    assert checked > 500


def test_product_rule_against_site_product_deg14():
    """Orbit-level oracle agreement for all products of degree <= 14."""
    from wreathfix.oracle import mul_site, normalize_site

    checked = 0
    for r in (1, 2, 3):
        lams = tripartitions_up_to(r, 13)
        gens = [t.triples[0] for t in tripartitions_up_to(r, 14) if t.length == 1]
        for lam in lams:
            n = lam.length + 1
            base = specialize(lam, n)
            for g in gens:
                if triple_degree(g, r) + lam.degree > 14:
                    continue
                product = mul_generator(g, SymElement.monomial(lam))
                lhs = {}
                for key, coeff in product.terms.items():
                    for orbit, c in specialize(key, n).terms.items():
                        lhs[orbit] = lhs.get(orbit, 0) + coeff * c
                lhs = {k: v for k, v in lhs.items() if v}
                rhs = mul_site(normalize_site(*g, r), base).terms
                assert lhs == rhs, (r, g, lam.triples)
                checked += 1
    assert checked > 2000
