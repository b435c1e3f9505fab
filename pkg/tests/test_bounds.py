from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from zagreb.bounds import (
    check_all,
    check_common_upper,
    check_das_upper,
    check_m1_lower,
    check_m2_lower,
    check_subdivision_theorem,
    check_variable_lower,
    check_variable_m2_lower,
    check_variable_upper,
    das_upper_bound,
    is_das_extremal,
)
from zagreb.errors import EmptyGraph, IsolatedVertex, LambdaOutOfRange, TooFewVertices
from zagreb.families import build_counterexample_family, build_named
from zagreb.graph import build_graph, classify, disjoint_union, empty_graph
from zagreb.indices import first_zagreb, second_zagreb

from conftest import graphs

C5 = build_named("cycle", 5)
K4 = build_named("complete", 4)
P3 = build_named("path", 3)
STAR6 = build_named("star", 6)
CAB = build_counterexample_family(12, 2)


def test_m1_lower_examples():
    c = check_m1_lower(C5)
    assert (c.lhs, c.rhs) == (20, 20) and c.tight and c.equality_condition_met
    c = check_m1_lower(P3)
    assert c.lhs * 3 == 18 and c.rhs * 3 == 16
    assert c.satisfied and not c.tight
    assert check_m1_lower(K4).tight


def test_m2_lower_examples():
    c = check_m2_lower(C5)
    assert c.lhs * 25 == 500 == c.rhs * 25 and c.tight
    c = check_m2_lower(STAR6)
    assert c.lhs * 36 == 900 and c.rhs * 36 == 500 and c.satisfied and not c.tight
    c = check_m2_lower(P3)
    assert c.lhs * 9 == 36 and c.rhs * 9 == 32 and c.satisfied


def test_common_upper_examples():
    assert all(c.tight for c in check_common_upper(K4))
    first, second = check_common_upper(STAR6)
    # 2*M2 = 50 against Delta*M1 = 150
    assert second.lhs == Fraction(25, 5) and second.rhs == Fraction(150, 10)
    assert second.satisfied and not second.tight
    assert all(c.satisfied and not c.tight for c in check_common_upper(CAB))


def test_common_upper_second_alone_tight_on_regular_plus_isolated():
    g = disjoint_union(build_named("complete", 3), empty_graph(1))
    first, second = check_common_upper(g)
    assert second.tight and not first.tight
    assert not classify(g).is_regular


def test_das_star():
    c = check_das_upper(STAR6)
    assert c.rhs == 5 * (2 + 4 + 0) == 30 == c.lhs
    assert c.tight and c.equality_condition_met


def test_das_clique_plus_isolated():
    g = disjoint_union(K4, empty_graph(2))
    # Substitution n=6, m=6, Delta=3, delta=0.
    expected = 6 * (Fraction(12, 5) + Fraction(4 * 3, 5) + 3 * (1 - Fraction(3, 5)))
    assert expected == 36
    c = check_das_upper(g)
    assert c.rhs == expected and c.lhs == 36
    assert c.tight and c.equality_condition_met


@pytest.mark.parametrize("g", [C5, K4, build_named("cycle", 8)])
def test_das_regular_tight(g):
    assert check_das_upper(g).tight


def test_das_needs_two_vertices():
    with pytest.raises(TooFewVertices):
        check_das_upper(empty_graph(1))


def test_empty_graph_errors():
    with pytest.raises(EmptyGraph):
        check_m1_lower(empty_graph(0))
    with pytest.raises(EmptyGraph):
        check_common_upper(empty_graph(3))


def test_variable_lower_examples():
    first, second = check_variable_lower(STAR6, 1)
    assert first.lhs == 30
    assert first.rhs == pytest.approx(6 * (10 / 6) ** 2)
    assert first.satisfied and not first.tight
    for lam in (0.5, 1, 1.7, 3):
        assert all(c.tight for c in check_variable_lower(C5, lam))


def test_variable_lower_ranges():
    with pytest.raises(LambdaOutOfRange):
        check_variable_lower(C5, 0.25)
    with pytest.raises(LambdaOutOfRange):
        check_variable_m2_lower(C5, -1)
    assert check_variable_m2_lower(C5, 0.25).tight
    with pytest.raises(IsolatedVertex):
        check_variable_lower(disjoint_union(C5, empty_graph(1)), 1)


def test_variable_upper_examples():
    first, second = check_variable_upper(STAR6, 2)
    assert second.lhs == 125 / 5
    assert second.rhs == 5 * 630 / 10 and second.satisfied
    assert all(c.tight for c in check_variable_upper(K4, 1.3))
    with pytest.raises(LambdaOutOfRange):
        check_variable_upper(K4, -0.5)


@given(graphs(min_n=1, max_n=12))
def test_variable_lambda_one_matches_exact(g):
    assume(g.m > 0 and g.min_degree >= 1)
    v1, v2 = check_variable_lower(g, 1)
    assert (v1.tight, v2.tight) == (check_m1_lower(g).tight, check_m2_lower(g).tight)
    u = check_variable_upper(g, 1)
    e = check_common_upper(g)
    assert [c.tight for c in u] == [c.tight for c in e]


def test_subdivision_examples():
    c = check_subdivision_theorem(build_named("complete", 3))
    assert c.tight and c.equality_condition_met
    c = check_subdivision_theorem(build_named("star", 4))
    assert c.lhs == Fraction(24, 7) and c.rhs == Fraction(24, 6)
    assert c.satisfied and not c.tight
    c = check_subdivision_theorem(CAB)
    assert c.lhs == Fraction(198 + 80, 19 + 20) and c.rhs == Fraction(396, 40)
    assert c.satisfied and not c.tight


@settings(max_examples=300)
@given(graphs(min_n=1, max_n=13))
def test_exact_bounds_hold_with_structural_equality(g):
    for c in check_all(g):
        assert c.satisfied, c
    regular = classify(g).is_regular
    assert check_m1_lower(g).tight == regular
    assert check_m2_lower(g).tight == regular
    if g.m:
        assert all(c.tight for c in check_common_upper(g)) == regular
    if g.n >= 2:
        assert check_das_upper(g).tight == is_das_extremal(g)


@settings(max_examples=300)
@given(graphs(min_n=1, max_n=13))
def test_common_bound_chain(g):
    assume(g.m > 0)
    n, m = g.n, g.m
    avg = Fraction(first_zagreb(g), n)
    ratio = Fraction(second_zagreb(g), m)
    lower = Fraction(4 * m * m, n * n)
    upper = Fraction(g.max_degree * first_zagreb(g), 2 * m)
    assert lower <= min(avg, ratio) <= max(avg, ratio) <= upper


@given(graphs(min_n=2, max_n=12))
def test_das_formula_is_rational_substitution(g):
    n, m, big, small = g.n, g.m, g.max_degree, g.min_degree
    # Same expression over a common denominator, evaluated as integers.
    numerator = m * (2 * m + (n - 2) * big + (big - small) * (n - 1 - big))
    assert das_upper_bound(n, m, big, small) == Fraction(numerator, n - 1)


@settings(max_examples=200)
@given(graphs(min_n=1, max_n=10), st.sampled_from([0.5, 0.75, 1.0, 1.5, 2.0, 3.0]))
def test_variable_bounds_hold(g, lam):
    assume(g.m > 0 and g.min_degree >= 1)
    for c in check_variable_lower(g, lam) + check_variable_upper(g, lam):
        assert c.satisfied, c
        assert not c.tight or c.satisfied
    if classify(g).is_regular:
        assert all(c.tight for c in check_variable_lower(g, lam) + check_variable_upper(g, lam))


def test_tight_implies_satisfied_everywhere():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    for c in check_all(g):
        assert c.satisfied or not c.tight
