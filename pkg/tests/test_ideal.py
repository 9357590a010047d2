import pytest
from hypothesis import given
from hypothesis import strategies as st

from nmi.errors import UnsupportedInput
from nmi.ideal import (
    divides,
    dual_star,
    incidence_matrix,
    make_ideal,
    max_power,
    minimalize,
    monomial_str,
    parse_monomial,
    power,
    power_membership,
    product,
    support,
    zero_ideal,
)
from oracles import in_power_by_products


def test_minimalize_drops_multiples():
    assert minimalize([(2, 0), (0, 2), (2, 2)]) == ((0, 2), (2, 0))


def test_degree7_generators_already_minimal(degree7_ideal):
    assert degree7_ideal.num_gens == 10
    assert set(degree7_ideal.degrees()) == {7}


def test_empty_generator_list_is_zero_ideal():
    I = make_ideal(3, [])
    assert I.kind == "zero" and I == zero_ideal(3)


def test_unit_ideal_absorbs():
    I = make_ideal(2, [(1, 0), (0, 0)])
    assert I.kind == "unit" and I.gens == ((0, 0),)


def test_incidence_matrices(triangle_ideal):
    A = incidence_matrix(triangle_ideal)
    assert [sum(A[i][j] for i in range(3)) for j in range(3)] == [2, 2, 2]
    assert incidence_matrix(make_ideal(1, [(2,)])) == ((2,),)
    with pytest.raises(UnsupportedInput):
        incidence_matrix(zero_ideal(2))


def test_products():
    assert product(make_ideal(2, [(1, 0)]), make_ideal(2, [(0, 1)])).gens == ((1, 1),)
    m = make_ideal(2, [(1, 0), (0, 1)])
    assert set(product(m, m).gens) == {(2, 0), (1, 1), (0, 2)}


def test_dual_star():
    tri = make_ideal(3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    assert set(dual_star(tri).gens) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    c5 = make_ideal(5, [tuple(1 if j in (i, (i + 1) % 5) else 0 for j in range(5)) for i in range(5)])
    assert dual_star(dual_star(c5)) == c5


def test_power_membership_examples(triangle_ideal):
    assert power_membership(triangle_ideal, (1, 1, 1), 1).member
    assert not power_membership(triangle_ideal, (1, 1, 1), 2).member
    cert = power_membership(triangle_ideal, (2, 2, 2), 3).certificate
    assert sum(cert) == 3


def test_support():
    assert support((2, 0, 1)) == frozenset({1, 3})
    assert support((0, 1, 0, 1, 1, 1)) == frozenset({2, 4, 5, 6})
    assert support((0, 0)) == frozenset()


def test_monomial_strings():
    assert parse_monomial("t1^2*t3", 3) == (2, 0, 1)
    assert parse_monomial("1", 2) == (0, 0)
    assert monomial_str((2, 0, 1)) == "t1^2*t3"
    with pytest.raises(ValueError):
        parse_monomial("t4", 3)
    with pytest.raises(ValueError):
        parse_monomial("x1", 3)


def test_max_power(triangle_ideal):
    assert max_power(triangle_ideal, (2, 2, 2)) == 3
    assert max_power(triangle_ideal, (1, 1, 1)) == 1


exps = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))


@given(st.lists(exps, min_size=1, max_size=4), st.tuples(*[st.integers(0, 5)] * 3), st.integers(0, 3))
def test_power_membership_matches_product_enumeration(raw, a, n):
    I = make_ideal(3, raw)
    if not I.is_proper:
        return
    found = power_membership(I, a, n)
    assert found.member == in_power_by_products(I.gens, a, n)
    if found.member:
        used = [sum(k * g[i] for k, g in zip(found.certificate, I.gens)) for i in range(3)]
        assert sum(found.certificate) == n and all(u <= x for u, x in zip(used, a))


@given(st.lists(exps, min_size=1, max_size=4), st.integers(1, 3))
def test_power_generators_lie_in_power(raw, n):
    I = make_ideal(3, raw)
    if not I.is_proper:
        return
    for g in power(I, n).gens:
        assert power_membership(I, g, n).member


@given(st.lists(exps, min_size=1, max_size=5))
def test_generators_form_an_antichain(raw):
    I = make_ideal(3, raw)
    for g in I.gens:
        for h in I.gens:
            assert g == h or not divides(g, h)
