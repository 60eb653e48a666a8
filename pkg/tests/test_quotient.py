from fractions import Fraction

import pytest
from util import tripartitions_up_to

from wreathfix.partitions import (
    RTuple,
    canon_tripartition,
    enumerate_fixed_basis,
    rtuple_degree,
    triple_degree,
)
from wreathfix.quotient import (
    FixedElement,
    as_canonical,
    expand_lemma4,
    filtration_holds,
    mul_gen_fixed,
    reduce_mod_J,
    reduce_tripartition,
)
from wreathfix.symfun import SymElement, TriPartition, mul_generator


def T(r, *triples):
    return TriPartition.from_triples(r, triples)


def fe(r, entries):
    out = FixedElement.zero(r)
    for parts, coeff in entries:
        out.add_term(RTuple.from_parts(r, parts), Fraction(coeff))
    return out


def test_ideal_generators_die():
    for r in (1, 2, 3):
        for a, b in [(1, 0), (0, 1), (2, 1), (3, 0)]:
            for c in range(r):
                assert reduce_tripartition(T(r, (a, b, c))).is_zero()


def test_diagonal_singletons():
    # m_{(a,a,c)} reduces to (-1)^a times one basis vector
    for r in (1, 2, 3):
        for a in range(0, 4):
            for c in range(r):
                if (a, c) == (0, 0):
                    continue
                got = reduce_tripartition(T(r, (a, a, c)))
                assert got == fe(r, [({c: [a]}, (-1) ** a)])


def test_canonical_indices_are_fixed():
    for r in (1, 2, 3):
        for lam in enumerate_fixed_basis(r, 5):
            key = canon_tripartition(lam)
            assert as_canonical(key) == lam
            assert reduce_tripartition(key) == FixedElement.unit(lam)


def test_hand_worked_reductions():
    # worked out by explicit polynomial manipulation in a few variables
    assert reduce_tripartition(T(1, (2, 1, 0), (0, 1, 0))) == fe(1, [({0: [2]}, -1)])
    assert reduce_tripartition(T(1, (1, 2, 0), (1, 0, 0))) == fe(1, [({0: [2]}, -1)])
    assert reduce_tripartition(T(1, (1, 1, 0), (1, 0, 0), (0, 1, 0))) == fe(
        1, [({0: [1, 1]}, -2), ({0: [2]}, -1)]
    )
    assert reduce_tripartition(T(1, (1, 1, 0), (1, 1, 0))) == fe(
        1, [({0: [1, 1]}, 1), ({0: [2]}, 1)]
    )
    # r = 2: square of the z class
    assert reduce_tripartition(T(2, (0, 0, 1), (0, 0, 1))) == fe(2, [({1: [0, 0]}, 1)])
    prod = mul_generator((0, 0, 1), SymElement.monomial(T(2, (0, 0, 1))))
    assert reduce_mod_J(prod) == fe(2, [({1: [0, 0]}, 2), ({0: [1]}, -1)])


def test_nonzero_torus_weight_reduces_to_zero():
    for r in (1, 2):
        for lam in tripartitions_up_to(r, 8):
            if lam.torus_weight != 0:
                assert reduce_tripartition(lam).is_zero(), lam.triples


def test_reduction_preserves_degree():
    for r in (1, 2, 3):
        for lam in tripartitions_up_to(r, 10, weight0_only=True):
            out = reduce_tripartition(lam)
            for key in out.terms:
                assert rtuple_degree(key) == lam.degree


def test_linearity_and_idempotence():
    for r in (1, 2):
        x = SymElement.zero(r)
        basis = enumerate_fixed_basis(r, 4)
        for i, lam in enumerate(basis):
            x = x + SymElement.monomial(canon_tripartition(lam), Fraction(i + 1, 3))
        out = reduce_mod_J(x)
        want = FixedElement(r, {lam: Fraction(i + 1, 3) for i, lam in enumerate(basis)})
        assert out == want


def test_expand_lemma4_examples():
    # b = 0: already canonical
    lam = RTuple.from_parts(2, {0: [2], 1: [1]})
    assert expand_lemma4(3, 0, 1, lam) == FixedElement.unit(lam.add_part(1, 3))
    # lam empty, a = b: sign (-1)^a on a single part
    for r in (1, 2):
        for a in (1, 2, 3):
            got = expand_lemma4(a, a, 0, RTuple.empty(r))
            assert got == fe(r, [({0: [a]}, (-1) ** a)])
    # r=2, a=b=1, c=0, one zero part: equals the engine value
    # (the reservoir exponent |lam|+a-b is zero here)
    zp = RTuple.from_parts(2, {1: [0]})
    key = T(2, (1, 1, 0), (0, 0, 1))
    got = expand_lemma4(1, 1, 0, zp)
    assert got == reduce_tripartition(key)
    assert not got.is_zero()


def test_expand_lemma4_preconditions():
    with pytest.raises(ValueError):
        expand_lemma4(0, 2, 0, RTuple.from_parts(1, {0: [1]}))  # reservoir short
    with pytest.raises(ValueError):
        expand_lemma4(0, 0, 0, RTuple.empty(1))  # illegal head
    with pytest.raises(ValueError):
        expand_lemma4(1, 1, 2, RTuple.empty(2))  # c out of range


def test_mul_gen_fixed_examples():
    # all statistics zero: a single part lands in component c
    for r in (2, 3):
        for c in range(1, r):
            assert mul_gen_fixed(0, c, RTuple.empty(r)) == fe(r, [({c: [0]}, 1)])
    # r=1 product against the one-part index, worked by hand
    lam1 = RTuple.from_parts(1, {0: [1]})
    assert mul_gen_fixed(1, 0, lam1) == fe(1, [({0: [1, 1]}, -2), ({0: [2]}, -3)])
    assert mul_gen_fixed(1, 0, RTuple.empty(1)) == fe(1, [({0: [1]}, -1)])


def test_mul_gen_fixed_has_overflow_terms():
    """Output support includes indices with a positive overflow count."""
    from wreathfix.coeffs import pq

    zp = RTuple.from_parts(2, {1: [0]})
    got = mul_gen_fixed(0, 1, zp)
    assert got == fe(2, [({1: [0, 0]}, 2), ({0: [1]}, -1)])
    # the key [1|] can only arise from mu = empty, which has P = 1
    assert pq(1, zp, RTuple.empty(2)).p == 1


AGREE_DEGREE = 12


def _heads(r, max_degree):
    for a in range(max_degree // r + 1):
        for b in range(max_degree // r + 1):
            for c in range(r):
                if (a, b, c) != (0, 0, 0) and r * (a + b) + 2 * c <= max_degree:
                    yield (a, b, c)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_expand_lemma4_agrees_with_engine(r):
    """Exhaustive closed-form vs rewriting agreement, degree <= 12."""
    checked = 0
    for lam in enumerate_fixed_basis(r, AGREE_DEGREE):
        base = rtuple_degree(lam) - r * lam.size
        for a, b, c in _heads(r, AGREE_DEGREE):
            reservoir = lam.size + a - b
            if reservoir < 0:
                continue
            degree = r * (a + b) + 2 * c + base + r * reservoir
            if degree > AGREE_DEGREE:
                continue
            triples = [(a, b, c)]
            for i, comp in enumerate(lam.comps):
                for p in comp.all_parts():
                    triples.append((p, 0, i))
            triples += [(0, 1, 0)] * reservoir
            closed = expand_lemma4(a, b, c, lam)
            engine = reduce_tripartition(TriPartition.from_triples(r, triples))
            assert closed == engine, (r, (a, b, c), str(lam))
            checked += 1
    assert checked > 50


@pytest.mark.parametrize("r", [1, 2, 3])
def test_mul_gen_fixed_agrees_with_engine(r):
    checked = 0
    for lam in enumerate_fixed_basis(r, AGREE_DEGREE):
        for a in range(AGREE_DEGREE // (2 * r) + 1):
            for c in range(r):
                if (a, c) == (0, 0):
                    continue
                if 2 * (r * a + c) + rtuple_degree(lam) > AGREE_DEGREE:
                    continue
                closed = mul_gen_fixed(a, c, lam)
                prod = mul_generator((a, a, c), SymElement.monomial(canon_tripartition(lam)))
                assert closed == reduce_mod_J(prod), (r, a, c, str(lam))
                checked += 1
    assert checked > 40


def test_filtration_examples():
    assert filtration_holds(1, 0, RTuple.empty(1))
    lam1 = RTuple.from_parts(1, {0: [1]})
    got = mul_gen_fixed(1, 0, lam1)
    assert {nu.size + nu.length for nu in got.terms} == {3, 4}
    assert filtration_holds(1, 0, lam1)


def test_filtration_sweep():
    for r in (1, 2, 3):
        for lam in enumerate_fixed_basis(r, 8):
            for a in range(3):
                for c in range(r):
                    if (a, c) == (0, 0):
                        continue
                    if 2 * (r * a + c) + rtuple_degree(lam) > 16:
                        continue
                    assert filtration_holds(a, c, lam), (r, a, c, str(lam))
