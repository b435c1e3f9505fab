"""Immutable simple undirected graphs on dense 0-based vertices.

Adjacency is kept as one Python int bitset per vertex so membership tests
and BFS frontiers are single bit operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DuplicateEdge, SelfLoop, VertexOutOfRange

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph. Build with :func:`build_graph`.

    ``edges`` is the sorted tuple of pairs ``(i, j)`` with ``i < j``; two
    graphs compare equal iff they have the same vertex count and edge set.
    """

    n: int
    edges: tuple[Edge, ...]
    degrees: tuple[int, ...] = field(repr=False, compare=False)
    adjacency: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        bits, out = self.adjacency[v], []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edge_list`` and return the graph on vertices ``0..n-1``.

    Raises SelfLoop, DuplicateEdge or VertexOutOfRange naming the pair.
    """
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    adjacency = [0] * n
    degrees = [0] * n
    edges = []
    append = edges.append
    for u, v in edge_list:
        if type(u) is not int or type(v) is not int:
            u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoop(f"edge ({u}, {v}) is a self-loop")
        if adjacency[u] >> v & 1:
            raise DuplicateEdge(f"edge ({u}, {v}) appears more than once")
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
        degrees[u] += 1
        degrees[v] += 1
        append((u, v) if u < v else (v, u))
    edges.sort()
    g = Graph(n, tuple(edges), tuple(degrees), tuple(adjacency))
    assert sum(g.degrees) == 2 * g.m
    return g


def empty_graph(n: int) -> Graph:
    return build_graph(n, ())


def components(g: Graph) -> list[int]:
    """Vertex bitsets of the connected components, ordered by lowest vertex."""
    remaining = (1 << g.n) - 1
    out = []
    while remaining:
        seed = remaining & -remaining
        reach, frontier = seed, seed
        while frontier:
            nxt = 0
            bits = frontier
            while bits:
                low = bits & -bits
                nxt |= g.adjacency[low.bit_length() - 1]
                bits ^= low
            frontier = nxt & ~reach
            reach |= frontier
        out.append(reach)
        remaining &= ~reach
    return out


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


@dataclass(frozen=True)
class GraphClass:
    connected: bool
    components: int
    cycle_rank: int
    is_tree: bool
    is_unicyclic: bool
    is_chemical: bool
    is_regular: bool
    is_star: bool
    is_cycle: bool
    is_complete: bool
    max_degree: int
    min_degree: int


def classify(g: Graph) -> GraphClass:
    """Structural flags used to partition scans.

    The empty graph (n = 0) counts as disconnected; a single vertex is
    connected. Stars are ``K_{1,n-1}`` with n >= 2, so ``K2`` is a star.
    """
    n, m = g.n, g.m
    c = len(components(g))
    connected = c == 1
    rank = m - n + c
    big, small = g.max_degree, g.min_degree
    regular = big == small
    return GraphClass(
        connected=connected,
        components=c,
        cycle_rank=rank,
        is_tree=connected and rank == 0,
        is_unicyclic=connected and rank == 1,
        is_chemical=big <= 4,
        is_regular=regular,
        is_star=n >= 2 and m == n - 1 and big == n - 1,
        is_cycle=connected and n >= 3 and regular and big == 2,
        is_complete=n >= 1 and 2 * m == n * (n - 1),
        max_degree=big,
        min_degree=small,
    )


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return build_graph(
        g1.n + g2.n,
        list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges],
    )


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of range(n)")
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
