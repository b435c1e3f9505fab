"""Degree-based bounds on the Zagreb indices, each with its equality case.

Every bound without a lambda exponent is compared exactly: sides are
``Fraction`` values and the decision is made on cross-multiplied integers.
The variable-lambda bounds are floating point with a relative tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import EmptyGraph, IsolatedVertex, LambdaOutOfRange, TooFewVertices
from .graph import Graph, classify
from .indices import (
    Verdict,
    compare_indices,
    first_zagreb,
    second_zagreb,
    variable_first_zagreb,
    variable_second_zagreb,
)

REL_TOL = 1e-9
ABS_TOL = 1e-12

Number = Union[Fraction, float]


@dataclass(frozen=True)
class BoundCheck:
    """Outcome of checking ``lhs <= rhs`` (or ``>=`` for lower bounds).

    ``equality_condition_met`` is the structural condition under which the
    bound is known to be attained, evaluated independently of the numbers.
    """

    name: str
    lhs: Number
    rhs: Number
    satisfied: bool
    tight: bool
    equality_condition_met: bool


def _exact(name: str, small: Fraction, large: Fraction, condition: bool,
           lhs: Fraction, rhs: Fraction) -> BoundCheck:
    return BoundCheck(name, lhs, rhs, small <= large, small == large, condition)


def _approx(name: str, small: float, large: float, condition: bool,
            lhs: float, rhs: float) -> BoundCheck:
    slack = max(REL_TOL * max(abs(small), abs(large)), ABS_TOL)
    return BoundCheck(
        name, lhs, rhs, small <= large + slack, abs(large - small) <= slack, condition
    )


def _need_vertices(g: Graph) -> None:
    if g.n == 0:
        raise EmptyGraph("bound needs n >= 1")


def _need_edges(g: Graph) -> None:
    if g.n == 0 or g.m == 0:
        raise EmptyGraph("bound needs m >= 1")


def check_m1_lower(g: Graph) -> BoundCheck:
    """``M1 >= 4m^2/n``, tight iff regular."""
    _need_vertices(g)
    m1 = Fraction(first_zagreb(g))
    bound = Fraction(4 * g.m * g.m, g.n)
    return _exact("m1_lower", bound, m1, classify(g).is_regular, m1, bound)


def check_m2_lower(g: Graph) -> BoundCheck:
    """``M2 >= 4m^3/n^2``, tight iff regular."""
    _need_vertices(g)
    m2 = Fraction(second_zagreb(g))
    bound = Fraction(4 * g.m ** 3, g.n * g.n)
    return _exact("m2_lower", bound, m2, classify(g).is_regular, m2, bound)


def check_common_upper(g: Graph) -> tuple[BoundCheck, BoundCheck]:
    """``M1/n <= Delta*M1/2m`` and ``M2/m <= Delta*M1/2m``.

    Both are tight at once iff the graph is regular. The second can be tight
    alone when a regular graph carries extra isolated vertices.
    """
    _need_edges(g)
    n, m = g.n, g.m
    m1, m2 = first_zagreb(g), second_zagreb(g)
    upper = Fraction(g.max_degree * m1, 2 * m)
    regular = classify(g).is_regular
    avg = Fraction(m1, n)
    ratio = Fraction(m2, m)
    return (
        _exact("common_upper_m1", avg, upper, regular, avg, upper),
        _exact("common_upper_m2", ratio, upper, regular, ratio, upper),
    )


def das_upper_bound(n: int, m: int, max_deg: int, min_deg: int) -> Fraction:
    """Right-hand side of the Das upper bound on M1; needs n >= 2."""
    return m * (
        Fraction(2 * m, n - 1)
        + Fraction((n - 2) * max_deg, n - 1)
        + (max_deg - min_deg) * (1 - Fraction(max_deg, n - 1))
    )


def is_das_extremal(g: Graph) -> bool:
    """Star, regular, or ``K_{Delta+1}`` plus isolated vertices."""
    cls = classify(g)
    if cls.is_star or cls.is_regular:
        return True
    big = cls.max_degree
    # Delta+1 vertices of degree Delta with no other edges force a clique.
    return (g.degrees.count(big) == big + 1
            and g.degrees.count(0) == g.n - big - 1)


def check_das_upper(g: Graph) -> BoundCheck:
    if g.n < 2:
        raise TooFewVertices("Das bound needs n >= 2")
    m1 = Fraction(first_zagreb(g))
    bound = das_upper_bound(g.n, g.m, g.max_degree, g.min_degree)
    return _exact("das_upper", m1, bound, is_das_extremal(g), m1, bound)


def check_variable_m1_lower(g: Graph, lam: float) -> BoundCheck:
    """``lM1 >= n (2m/n)^(2 lam)`` for ``lam >= 1/2``."""
    if lam < 0.5:
        raise LambdaOutOfRange(f"variable M1 lower bound needs lambda >= 1/2, got {lam}")
    _need_vertices(g)
    if g.min_degree < 1:
        raise IsolatedVertex("variable lower bounds need minimum degree >= 1")
    value = variable_first_zagreb(g, lam).value
    bound = g.n * (2 * g.m / g.n) ** (2 * lam)
    return _approx("variable_m1_lower", bound, value, classify(g).is_regular, value, bound)


def check_variable_m2_lower(g: Graph, lam: float) -> BoundCheck:
    """``lM2 >= m (2m/n)^(2 lam)`` for ``lam >= 0``."""
    if lam < 0:
        raise LambdaOutOfRange(f"variable M2 lower bound needs lambda >= 0, got {lam}")
    _need_vertices(g)
    if g.min_degree < 1:
        raise IsolatedVertex("variable lower bounds need minimum degree >= 1")
    value = variable_second_zagreb(g, lam).value
    bound = g.m * (2 * g.m / g.n) ** (2 * lam)
    return _approx("variable_m2_lower", bound, value, classify(g).is_regular, value, bound)


def check_variable_lower(g: Graph, lam: float) -> tuple[BoundCheck, BoundCheck]:
    return check_variable_m1_lower(g, lam), check_variable_m2_lower(g, lam)


def check_variable_upper(g: Graph, lam: float) -> tuple[BoundCheck, BoundCheck]:
    """``lM1/n <= Delta*lM1/2m`` and ``lM2/m <= Delta*lM1/2m``; ``lam >= 0`` only."""
    if lam < 0:
        raise LambdaOutOfRange(f"variable upper bounds are only supported for lambda >= 0, got {lam}")
    _need_edges(g)
    vm1 = variable_first_zagreb(g, lam).value
    vm2 = variable_second_zagreb(g, lam).value
    upper = g.max_degree * vm1 / (2 * g.m)
    regular = classify(g).is_regular
    avg, ratio = vm1 / g.n, vm2 / g.m
    return (
        _approx("variable_upper_m1", avg, upper, regular, avg, upper),
        _approx("variable_upper_m2", ratio, upper, regular, ratio, upper),
    )


def check_subdivision_theorem(g: Graph) -> BoundCheck:
    """``M1(S)/(n+m) <= M2(S)/(2m)`` on the subdivision graph S of ``g``.

    Computed on the constructed subdivision, not through the closed forms.
    """
    from .families import subdivide

    _need_edges(g)
    s = subdivide(g)
    report = compare_indices(s)
    lhs = Fraction(report.m1, s.n)
    rhs = Fraction(report.m2, s.m)
    return BoundCheck(
        "subdivision",
        lhs,
        rhs,
        report.verdict is not Verdict.FAILS,
        report.verdict is Verdict.HOLDS_WITH_EQUALITY,
        classify(g).is_regular,
    )


def check_all(g: Graph, das: bool = True) -> list[BoundCheck]:
    """Every lambda-free bound applicable to ``g``."""
    checks = [check_m1_lower(g), check_m2_lower(g)]
    if g.m:
        checks.extend(check_common_upper(g))
    if das and g.n >= 2:
        checks.append(check_das_upper(g))
    return checks
