import pytest

from posgroups import InvalidParameters, element_order, enumerate_elements, order_spectrum
from posgroups.constructions import (
    C6_C7_TABLE,
    Theorem32Params,
    build_c2a_m21,
    build_c6_c7,
    build_remark_p5,
    build_theorem32,
    predicted_order,
    predicted_table,
    remark_p5_table,
)
from posgroups.feasibility import feasibility_report
from posgroups.numtheory import padic_valuation
from posgroups.spectra import odd_prime_bound_check, phi_divisibility_check, pos_verdict


def small_theorem32_params():
    out = []
    for p, k in ((3, 0), (5, 1), (17, 2)):
        for alpha in range(2**k, 2**k + 4):
            for beta in range(1, 4):
                if 2**alpha * p**beta <= 20000:
                    out.append((p, alpha, beta))
    return out


def test_params_validation():
    params = Theorem32Params.build(5, 2, 1)
    assert (params.k, params.z, params.M, params.N) == (1, 2, 4, 5)
    with pytest.raises(InvalidParameters):
        Theorem32Params.build(5, 1, 1)
    with pytest.raises(InvalidParameters):
        Theorem32Params.build(7, 3, 1)
    with pytest.raises(InvalidParameters):
        Theorem32Params.build(3, 1, 0)


def test_predicted_order_examples():
    params = Theorem32Params.build(5, 2, 1)
    assert predicted_order(0, 0, params) == 1
    assert all(predicted_order(1, y, params) == 4 for y in range(5))
    assert predicted_order(0, 1, params) == 5


def test_predicted_table_examples():
    assert list(predicted_table(Theorem32Params.build(3, 1, 1))) == [(1, 1), (2, 3), (3, 2)]
    assert list(predicted_table(Theorem32Params.build(5, 2, 1))) == [(1, 1), (2, 5), (4, 10), (5, 4)]
    assert list(predicted_table(Theorem32Params.build(5, 3, 1))) == [
        (1, 1), (2, 1), (4, 10), (5, 4), (8, 20), (10, 4),
    ]


@pytest.mark.parametrize("p, alpha, beta", small_theorem32_params())
def test_theorem32_table_matches_enumeration(p, alpha, beta):
    group, table = build_theorem32(p, alpha, beta)
    assert group.cardinality == 2**alpha * p**beta == table.total()
    assert order_spectrum(group) == table
    assert pos_verdict(table, group.cardinality).is_pos
    assert not group.is_abelian()


@pytest.mark.parametrize("p, alpha, beta", small_theorem32_params())
def test_predicted_order_matches_iteration(p, alpha, beta):
    group, _ = build_theorem32(p, alpha, beta)
    params = Theorem32Params.build(p, alpha, beta)
    for x, y in enumerate_elements(group):
        assert predicted_order(x, y, params) == element_order(group, (x, y))


def test_theorem32_rejects_bad_hypotheses():
    with pytest.raises(InvalidParameters):
        build_theorem32(5, 1, 1)
    with pytest.raises(InvalidParameters):
        build_theorem32(17, 3, 1)
    with pytest.raises(InvalidParameters):
        build_theorem32(11, 4, 1)


def test_theorem32_with_p3_has_cyclic_pos_orders():
    for alpha in range(1, 5):
        for beta in range(1, 4):
            group, _ = build_theorem32(3, alpha, beta)
            assert group.cardinality == 2**alpha * 3**beta


def test_remark_examples():
    group, table = build_remark_p5(2, 1)
    assert list(table) == [(1, 1), (2, 1), (4, 10), (5, 4), (10, 4)]
    assert group.cardinality == 20 and group.z == 4
    assert order_spectrum(group) == table
    group, table = build_remark_p5(3, 1)
    assert group.cardinality == 40 and pos_verdict(table, 40).is_pos
    assert order_spectrum(group) == table
    with pytest.raises(InvalidParameters):
        build_remark_p5(1, 1)


@pytest.mark.parametrize("alpha, beta", [(a, b) for a in range(2, 6) for b in range(1, 3)])
def test_remark_table_matches_enumeration(alpha, beta):
    group, table = build_remark_p5(alpha, beta)
    assert order_spectrum(group) == table == remark_p5_table(alpha, beta)


def test_c6_c7():
    group, table = build_c6_c7()
    assert table.orders == [1, 2, 3, 6, 7, 14]
    assert table.counts == [1, 1, 14, 14, 6, 6]
    assert order_spectrum(group) == table
    assert pos_verdict(table, 42).is_pos
    assert not group.is_abelian()


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_c2a_m21(a):
    group = build_c2a_m21(a)
    assert group.cardinality == 21 * 2**a
    spectrum = order_spectrum(group)
    assert pos_verdict(spectrum, group.cardinality).is_pos
    assert not group.is_abelian()
    if a == 1:
        assert spectrum == C6_C7_TABLE


def test_predicted_tables_pass_necessary_conditions():
    tables = [predicted_table(Theorem32Params.build(p, a, b)) for p, a, b in small_theorem32_params()]
    tables += [remark_p5_table(a, b) for a in range(2, 7) for b in range(1, 4)]
    tables.append(C6_C7_TABLE)
    for table in tables:
        order = table.total()
        assert pos_verdict(table, order).is_pos
        assert phi_divisibility_check(table) == []
        assert odd_prime_bound_check(table, padic_valuation(order, 2)) == []
        assert feasibility_report(order).feasible
