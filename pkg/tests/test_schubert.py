from collections import Counter

import pytest
from hypothesis import given, strategies as st

from flagcoh.cohomology import picard_one_ring
from flagcoh.dynkin import DynkinDiagram, MarkedDiagram
from flagcoh.schubert import (
    SchubertClass,
    SchubertSum,
    all_classes,
    betti_numbers,
    effective_divisibility,
    min_vanishing_degree,
    product,
    product_sum,
)


def schur2(l1, l2):
    """s_(l1,l2)(x1, x2) as a Counter of exponent pairs."""
    return Counter({(l2 + i, l2 + (l1 - l2) - i): 1 for i in range(l1 - l2 + 1)})


def schur_product_oracle(m, a, b):
    pa, pb = schur2(a.a1, a.a2), schur2(b.a1, b.a2)
    prod = Counter()
    for (i, j), u in pa.items():
        for (k, l), v in pb.items():
            prod[(i + k, j + l)] += u * v
    out = {}
    while any(prod.values()):
        lead = max(e for e, c in prod.items() if c)
        c = prod[lead]
        out[lead] = c
        for e, v in schur2(*lead).items():
            prod[e] -= c * v
    return SchubertSum(m, {SchubertClass(m, l1, l2): c for (l1, l2), c in out.items() if l1 <= m - 1})


@st.composite
def class_pairs(draw, max_m=9):
    m = draw(st.integers(2, max_m))
    cls = all_classes(m)
    return m, draw(st.sampled_from(cls)), draw(st.sampled_from(cls)), draw(st.sampled_from(cls))


@given(class_pairs())
def test_against_schur_oracle(data):
    m, a, b, _ = data
    assert product(a, b) == schur_product_oracle(m, a, b)


@given(class_pairs())
def test_commutative_associative_effective(data):
    m, a, b, c = data
    assert product(a, b) == product(b, a)
    assert product(a, b).is_effective()
    left = product_sum(product(a, b), SchubertSum.of(c))
    right = product_sum(SchubertSum.of(a), product(b, c))
    assert left == right


@given(class_pairs())
def test_vanishing_iff(data):
    m, a, b, _ = data
    assert product(a, b).is_zero() == (max(a.a1 + b.a2, a.a2 + b.a1) > m - 1)


@given(class_pairs())
def test_codimension_additive(data):
    m, a, b, _ = data
    assert all(k.codim == a.codim + b.codim for k in product(a, b).coeffs)


@pytest.mark.parametrize("m", range(3, 8))
def test_betti_agrees_with_quotient(m):
    ring = picard_one_ring(MarkedDiagram.single(DynkinDiagram("A", m), 2))
    assert betti_numbers(m) == ring.betti[: 2 * m - 1]


@pytest.mark.parametrize("m", range(3, 11))
def test_vanishing_degree(m):
    assert min_vanishing_degree(m) == m + 1
    assert effective_divisibility(m) == m


def test_point_class_duality():
    m = 4
    top = SchubertClass(m, m - 1, m - 1)
    for a in all_classes(m):
        dual = SchubertClass(m, m - 1 - a.a2, m - 1 - a.a1)
        assert product(a, dual) == SchubertSum.of(top)


def test_invalid_class():
    with pytest.raises(ValueError):
        SchubertClass(3, 3, 0)
    with pytest.raises(ValueError):
        SchubertClass(3, 1, 2)
