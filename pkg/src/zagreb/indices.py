"""First/second Zagreb indices, their variable versions, and the exact
``M1/n <= M2/m`` verdict."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import EmptyGraph, IsolatedVertexWithNegativeLambda
from .graph import Graph


class Verdict(str, enum.Enum):
    HOLDS_STRICT = "HoldsStrict"
    HOLDS_WITH_EQUALITY = "HoldsWithEquality"
    FAILS = "Fails"

    @classmethod
    def from_sign(cls, comparison: int) -> "Verdict":
        if comparison > 0:
            return cls.HOLDS_STRICT
        if comparison == 0:
            return cls.HOLDS_WITH_EQUALITY
        return cls.FAILS


@dataclass(frozen=True)
class IndexReport:
    n: int
    m: int
    m1: int
    m2: int
    comparison: int  # m2 * n - m1 * m
    verdict: Verdict


@dataclass(frozen=True)
class VariableIndexValue:
    lam: float
    value: float


def first_zagreb(g: Graph) -> int:
    return sum(d * d for d in g.degrees)


def second_zagreb(g: Graph) -> int:
    deg = g.degrees
    return sum(deg[u] * deg[v] for u, v in g.edges)


def compare_indices(g: Graph) -> IndexReport:
    """Decide ``M1/n <= M2/m`` by the sign of ``M2*n - M1*m``.

    Python ints are unbounded, so the cross product never overflows.
    """
    if g.n == 0 or g.m == 0:
        raise EmptyGraph(f"comparison undefined for n={g.n}, m={g.m}")
    m1, m2 = first_zagreb(g), second_zagreb(g)
    comparison = m2 * g.n - m1 * g.m
    return IndexReport(g.n, g.m, m1, m2, comparison, Verdict.from_sign(comparison))


def _check_lambda(g: Graph, lam: float) -> None:
    if lam < 0 and g.n and g.min_degree == 0:
        raise IsolatedVertexWithNegativeLambda(
            f"lambda={lam} < 0 is undefined on a graph with an isolated vertex"
        )


def variable_first_zagreb(g: Graph, lam: float) -> VariableIndexValue:
    _check_lambda(g, lam)
    return VariableIndexValue(lam, math.fsum(float(d) ** (2 * lam) for d in g.degrees))


def variable_second_zagreb(g: Graph, lam: float) -> VariableIndexValue:
    _check_lambda(g, lam)
    deg = g.degrees
    return VariableIndexValue(
        lam, math.fsum(float(deg[u] * deg[v]) ** lam for u, v in g.edges)
    )
