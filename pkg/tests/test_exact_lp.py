from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nmi.exact_lp import (
    format_rational,
    lp_max,
    lp_min,
    rank,
    solve_square,
    verify_max_certificate,
    verify_min_certificate,
)
from oracles import lp_max_by_vertices

TRIANGLE = [[1, 0, 1], [1, 1, 0], [0, 1, 1]]


def test_triangle_packing_value():
    sol = lp_max(TRIANGLE, [1, 1, 1], [1, 1, 1])
    assert sol.optimal and sol.value == Fraction(3, 2)
    assert sol.primal_point == (Fraction(1, 2),) * 3
    assert lp_max_by_vertices(TRIANGLE, [1, 1, 1], [1, 1, 1]) == Fraction(3, 2)


def test_zero_rhs_gives_origin():
    sol = lp_max([[1]], [0], [1])
    assert sol.value == 0 and sol.primal_point == (0,)


def test_antihole_cover_matrix_value():
    from known_examples import ANTIHOLE_COVER_MATRIX

    sol = lp_max(ANTIHOLE_COVER_MATRIX, [1] * 7, [1] * 7)
    assert sol.value == Fraction(7, 5)
    assert sol.value < 2
    assert lp_max_by_vertices(ANTIHOLE_COVER_MATRIX, [1] * 7, [1] * 7) == Fraction(7, 5)
    assert verify_max_certificate(ANTIHOLE_COVER_MATRIX, [1] * 7, [1] * 7, sol)


def test_min_forms():
    sol = lp_min(TRIANGLE, [1, 1, 1], [1, 1, 1])
    assert sol.value == Fraction(3, 2)
    assert lp_min(TRIANGLE, [0, 0, 0], [1, 1, 1]).value == 0
    assert lp_min([[2], [2]], [1, 1], [1]).value == Fraction(1, 2)


def test_infeasible_and_unbounded_certificates():
    A, b, c = [[1, 1]], [-1], [1, 0]
    sol = lp_max(A, b, c)
    assert sol.status == "infeasible" and verify_max_certificate(A, b, c, sol)
    A, b, c = [[1, -1]], [1], [0, 1]
    sol = lp_max(A, b, c)
    assert sol.status == "unbounded" and verify_max_certificate(A, b, c, sol)
    sol = lp_min([[-1]], [1], [1])
    assert sol.status == "infeasible" and verify_min_certificate([[-1]], [1], [1], sol)


def test_rank_examples():
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank(TRIANGLE) == 3


def test_solve_square():
    assert solve_square([[2, 0], [0, 4]], [1, 1]) == (Fraction(1, 2), Fraction(1, 4))
    assert solve_square([[1, 1], [1, 1]], [1, 2]) is None


def test_format_rational():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(4, 2)) == "2"


small = st.integers(min_value=-4, max_value=4)


@st.composite
def systems(draw):
    m = draw(st.integers(1, 6))
    n = draw(st.integers(1, 6))
    A = draw(st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m))
    b = draw(st.lists(small, min_size=m, max_size=m))
    c = draw(st.lists(small, min_size=n, max_size=n))
    return A, b, c


@given(systems())
def test_max_certificates_always_verify(system):
    A, b, c = system
    assert verify_max_certificate(A, b, c, lp_max(A, b, c))


@given(systems())
def test_min_certificates_always_verify(system):
    A, b, c = system
    assert verify_min_certificate(A, b, c, lp_min(A, b, c))


@given(systems())
def test_value_matches_vertex_enumeration(system):
    A, b, c = system
    # make the problem bounded and feasible: nonnegative rhs and an extra box row
    b = [abs(x) for x in b]
    n = len(c)
    A = A + [[1] * n]
    b = b + [5]
    sol = lp_max(A, b, c)
    assert sol.optimal
    assert sol.value == lp_max_by_vertices(A, b, c)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        lp_max([[1, 2]], [1], [1])
