"""Named graphs, the star-with-triangle-chain family C(a, b), the
subdivision transform, and the threshold on a beyond which C(a, b) breaks
``M1/n <= M2/m``."""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from typing import Optional

from .errors import ParameterOutOfRange
from .graph import Graph, build_graph, disjoint_union


@dataclass(frozen=True)
class FamilySpec:
    """Closed-form predictions for C(a, b)."""

    a: int
    b: int
    predicted_n: int = field(init=False)
    predicted_m: int = field(init=False)
    predicted_m1: int = field(init=False)
    predicted_m2: int = field(init=False)
    predicted_cycles: int = field(init=False)

    def __post_init__(self):
        a, b = self.a, self.b
        if a < 3 or b < 1:
            raise ParameterOutOfRange(f"C(a, b) needs a >= 3 and b >= 1, got a={a}, b={b}")
        object.__setattr__(self, "predicted_n", a + 3 * b + 1)
        object.__setattr__(self, "predicted_m", a + 4 * b)
        object.__setattr__(self, "predicted_m1", a * a + a + 22 * b - 2)
        object.__setattr__(self, "predicted_m2", a * a + a + 30 * b - 8)
        object.__setattr__(self, "predicted_cycles", b)


def build_counterexample_family(a: int, b: int) -> Graph:
    """C(a, b): a star with ``a`` leaves and ``b`` triangles chained off leaf 1.

    Labels: center 0, leaves 1..a, then each triangle as (v_i, u_i, w_i).
    Triangle i is linked to the next by the edge u_i v_{i+1}.
    """
    FamilySpec(a, b)
    edges = [(0, leaf) for leaf in range(1, a + 1)]
    for i in range(b):
        v, u, w = a + 1 + 3 * i, a + 2 + 3 * i, a + 3 + 3 * i
        edges += [(v, u), (u, w), (v, w)]
        edges.append((1, v) if i == 0 else (v - 2, v))  # v - 2 is u_{i-1}
    return build_graph(a + 3 * b + 1, edges)


def cab_quadratic(a: int, b: int) -> int:
    """``M2*n - M1*m`` of C(a, b), expanded as a quadratic in ``a``."""
    return a * a * (1 - b) + a * (7 * b - 5) + (2 * b * b + 14 * b - 8)


def discriminant(b: int) -> int:
    return 8 * b ** 3 + 97 * b ** 2 - 158 * b + 57


@dataclass(frozen=True)
class ThresholdResult:
    b: int
    discriminant: int
    a_min: Optional[int]


def threshold_a(b: int) -> ThresholdResult:
    """Smallest ``a >= 3`` with C(a, b) failing, by exact integer sign scan."""
    if b < 2:
        raise ParameterOutOfRange(
            f"threshold needs b >= 2 (b={b} makes the quadratic linear and never negative)"
        )
    a = 3
    # Leading coefficient 1 - b < 0, so the scan terminates.
    while cab_quadratic(a, b) >= 0:
        a += 1
    return ThresholdResult(b, discriminant(b), a)


def threshold_root(b: int, digits: int = 50) -> Decimal:
    """Larger real root of the quadratic in ``a``, to ``digits`` digits.

    C(a, b) fails exactly when ``a`` exceeds this root.
    """
    if b < 2:
        raise ParameterOutOfRange(f"threshold needs b >= 2, got {b}")
    with localcontext() as ctx:
        ctx.prec = digits
        root = Decimal(discriminant(b)).sqrt()
        return (Decimal(7 * b - 5) + root) / Decimal(2 * (b - 1))


def build_named(family: str, size: int) -> Graph:
    """``star`` (size = vertex count), ``cycle``, ``path`` or ``complete``."""
    minimum = {"star": 2, "cycle": 3, "path": 1, "complete": 1}
    if family not in minimum:
        raise ParameterOutOfRange(f"unknown family {family!r}")
    if size < minimum[family]:
        raise ParameterOutOfRange(f"{family} needs size >= {minimum[family]}, got {size}")
    if family == "star":
        edges = [(0, i) for i in range(1, size)]
    elif family == "path":
        edges = [(i, i + 1) for i in range(size - 1)]
    elif family == "cycle":
        edges = [(i, (i + 1) % size) for i in range(size)]
    else:
        edges = [(i, j) for j in range(size) for i in range(j)]
    return build_graph(size, edges)


def build_disconnected_counterexample() -> Graph:
    """Six-vertex star plus a disjoint triangle."""
    return disjoint_union(build_named("star", 6), build_named("complete", 3))


def subdivide(g: Graph) -> Graph:
    """Put a new degree-2 vertex on every edge; edge k gets vertex ``n + k``."""
    edges = []
    for k, (u, v) in enumerate(g.edges):
        edges += [(u, g.n + k), (v, g.n + k)]
    return build_graph(g.n + g.m, edges)


def parse_family(text: str) -> Graph:
    """Parse ``star:6``, ``cycle:5``, ``path:4``, ``complete:4``, ``cab:12,2``
    or ``s6k3``."""
    name, _, params = text.partition(":")
    name = name.strip().lower()
    try:
        values = [int(p) for p in params.split(",")] if params else []
    except ValueError:
        raise ParameterOutOfRange(f"bad family parameters in {text!r}") from None
    if name == "s6k3" and not values:
        return build_disconnected_counterexample()
    if name == "cab" and len(values) == 2:
        return build_counterexample_family(*values)
    if name in ("star", "cycle", "path", "complete") and len(values) == 1:
        return build_named(name, values[0])
    raise ParameterOutOfRange(f"unrecognised family spec {text!r}")

