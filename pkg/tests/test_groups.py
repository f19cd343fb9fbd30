import math
import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from posgroups.groups import (
    AlternatingGroup,
    BudgetExceeded,
    Cyclic,
    DirectProduct,
    InvalidParameters,
    SymmetricGroup,
    close_generators,
    compose,
    element_order,
    enumerate_elements,
    make_metacyclic,
    make_twisted,
    permutation_parity,
)
from posgroups.numtheory import multiplicative_order


def naive_order(group, g):
    t, h = 1, g
    while h != group.identity:
        h = group.multiply(h, g)
        t += 1
    return t


def small_groups():
    from conftest import quaternion_regular_generators

    return [
        Cyclic(1),
        Cyclic(12),
        Cyclic(97),
        make_twisted(6, 7, 2),
        make_twisted(4, 5, 2),
        make_twisted(8, 25, 7),
        make_twisted(2, 16, 7),
        make_metacyclic(3, 7, 2),
        DirectProduct(Cyclic(4), make_metacyclic(3, 7, 2)),
        DirectProduct(Cyclic(2), Cyclic(2)),
        SymmetricGroup(5),
        AlternatingGroup(5),
        close_generators(4, [[1, 2, 3, 0], [0, 3, 2, 1]]),
        close_generators(8, quaternion_regular_generators()),
    ]


GROUPS = small_groups()
IDS = [g.label for g in GROUPS]


def test_make_twisted_examples():
    g = make_twisted(6, 7, 2)
    assert g.cardinality == 42
    assert not g.is_abelian()
    assert make_twisted(5, 9, 1).is_abelian()
    make_twisted(6, 7, 4)  # 4^6 = 1 mod 7
    with pytest.raises(InvalidParameters):
        make_twisted(4, 7, 2)  # 2^4 = 2 mod 7
    with pytest.raises(InvalidParameters):
        make_twisted(2, 9, 3)  # not a unit


def test_twisted_multiplication_examples():
    g = make_twisted(6, 7, 2)
    assert g.multiply((1, 0), (0, 1)) == (1, 1)
    assert g.multiply((0, 1), (1, 0)) == (1, 2)
    with pytest.raises(ValueError):
        g.multiply((6, 0), (0, 1))


def test_permutation_composition_left_to_right():
    s3 = SymmetricGroup(3)
    t01, t12 = (1, 0, 2), (0, 2, 1)
    product = s3.multiply(t01, t12)
    # apply (0 1) first, then (1 2): 0 -> 1 -> 2, 1 -> 0, 2 -> 1
    assert product == (2, 0, 1)
    assert element_order(s3, product) == 3


def test_element_order_examples():
    assert element_order(Cyclic(12), 0) == 1
    assert element_order(Cyclic(12), 1) == 12
    g = make_twisted(6, 7, 2)
    assert element_order(g, (1, 0)) == 6
    assert element_order(g, (0, 1)) == 7
    assert element_order(g, (1, 1)) == 6


@pytest.mark.parametrize("group", GROUPS, ids=IDS)
def test_group_axioms(group):
    elements = list(enumerate_elements(group))
    assert len(elements) == len(set(elements)) == group.cardinality
    assert elements == sorted(elements)
    e = group.identity
    for g in elements:
        assert group.multiply(e, g) == g == group.multiply(g, e)
        assert group.multiply(g, group.inverse(g)) == e == group.multiply(group.inverse(g), g)
    rng = random.Random(0)
    for _ in range(10**4):
        a, b, c = (rng.choice(elements) for _ in range(3))
        assert group.multiply(group.multiply(a, b), c) == group.multiply(a, group.multiply(b, c))


@pytest.mark.parametrize("group", GROUPS, ids=IDS)
def test_element_order_matches_repeated_multiplication(group):
    for g in enumerate_elements(group):
        o = element_order(group, g)
        assert group.cardinality % o == 0
        assert o == naive_order(group, g)


@st.composite
def twisted_params(draw):
    n = draw(st.integers(min_value=1, max_value=60))
    units = [z for z in range(n) if math.gcd(z, n) == 1] or [0]
    z = draw(st.sampled_from(units))
    base = multiplicative_order(z, n) if n > 1 else 1
    m = base * draw(st.integers(min_value=1, max_value=4))
    return m, n, z


@settings(max_examples=60, deadline=None)
@given(twisted_params())
def test_twisted_is_a_group(params):
    m, n, z = params
    g = make_twisted(m, n, z)
    elements = list(enumerate_elements(g))
    rng = random.Random(m * 1000 + n)
    for _ in range(200):
        a, b, c = (rng.choice(elements) for _ in range(3))
        assert g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c))
    assert g.is_abelian() == (z % n == 1 % n)


@pytest.mark.parametrize("m, n, r", [(3, 7, 2), (2, 3, 2), (6, 7, 3), (4, 5, 2), (2, 9, 8)])
def test_metacyclic_relations(m, n, r):
    g = make_metacyclic(m, n, r)
    x, y = (1, 0), (0, 1)
    assert element_order(g, x) == m
    assert element_order(g, y) == n
    conj = g.multiply(g.multiply(x, y), g.inverse(x))
    assert conj == g.power(y, r)


def test_metacyclic_small_cases():
    assert make_metacyclic(1, 11, 1).is_abelian()
    s3_like = make_metacyclic(2, 3, 2)
    assert s3_like.cardinality == 6 and not s3_like.is_abelian()
    m21 = make_metacyclic(3, 7, 2)
    assert m21.cardinality == 21 and not m21.is_abelian()


def test_enumeration_examples():
    assert list(enumerate_elements(Cyclic(4))) == [0, 1, 2, 3]
    assert list(enumerate_elements(make_twisted(6, 7, 2))) == [(x, y) for x in range(6) for y in range(7)]
    a4 = list(enumerate_elements(AlternatingGroup(4)))
    assert len(a4) == 12
    assert a4 == [p for p in permutations(range(4)) if permutation_parity(p) == 0]


def test_budget_refusal():
    with pytest.raises(BudgetExceeded) as info:
        list(enumerate_elements(SymmetricGroup(10), budget=1000))
    assert "3628800" in str(info.value) and "1000" in str(info.value)
    with pytest.raises(BudgetExceeded):
        close_generators(6, [[1, 2, 3, 4, 5, 0], [1, 0, 2, 3, 4, 5]], budget=100)


def test_closure_examples(q8):
    assert close_generators(3, [[0, 1, 2]]).cardinality == 1
    assert close_generators(3, []).cardinality == 1
    assert close_generators(4, [[1, 2, 3, 0], [0, 3, 2, 1]]).cardinality == 8
    assert q8.cardinality == 8
    assert close_generators(5, [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]]).cardinality == 120
    with pytest.raises(InvalidParameters):
        close_generators(3, [[0, 0, 1]])


def test_closure_membership_is_authoritative(d4):
    assert (1, 2, 3, 0) in d4
    assert (1, 0, 2, 3) not in d4  # a transposition outside D_4
    with pytest.raises(ValueError):
        d4.multiply((1, 0, 2, 3), d4.identity)


def test_parity_matches_inversion_count():
    for n in range(1, 8):
        for p in permutations(range(n)):
            inversions = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
            assert permutation_parity(p) == inversions % 2


def test_compose_is_apply_first_then_second():
    g, h = (1, 2, 0), (0, 2, 1)
    assert all(compose(g, h)[i] == h[g[i]] for i in range(3))


def test_alternating_small_degrees():
    assert AlternatingGroup(1).cardinality == 1
    assert AlternatingGroup(2).cardinality == 1
    assert len(list(enumerate_elements(AlternatingGroup(2)))) == 1
