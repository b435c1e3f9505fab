"""Exhaustive and corpus-driven scans of the Zagreb comparison and bounds.

Labeled graphs on n vertices are identified with edge masks: bit k of the
mask is the k-th pair in graph6 column order (0,1), (0,2), (1,2), (0,3), ...
The exhaustive scan evaluates whole ranges of masks at once with numpy
int64 arithmetic, which is exact for n <= 8. Corpus scans evaluate each
parsed graph through the scalar index and bound functions. Both feed the
same aggregation, so their reports are directly comparable.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from . import bounds
from .errors import NTooLarge, ParameterOutOfRange
from .families import build_counterexample_family, threshold_a
from .graph import Graph, build_graph, components
from .graph_io import parse_graph6
from .indices import Verdict, first_zagreb, second_zagreb

EXHAUSTIVE_LIMIT = 8
CHECKS = ("m1_lower", "m2_lower", "common_upper", "das")
DEFAULT_CAP = 1000
CHUNK_BITS = 16
CORPUS_BATCH = 2000


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(1, n) for i in range(j))


def graph_from_mask(n: int, mask: int) -> Graph:
    return build_graph(n, [p for k, p in enumerate(edge_pairs(n)) if mask >> k & 1])


def _mask_connected(n: int, mask: int) -> bool:
    if n == 0:
        return False
    adj = [0] * n
    for k, (i, j) in enumerate(edge_pairs(n)):
        if mask >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    reach = frontier = 1
    while frontier:
        nxt = 0
        for v in range(n):
            if frontier >> v & 1:
                nxt |= adj[v]
        frontier = nxt & ~reach
        reach |= frontier
    return reach == (1 << n) - 1


def enumerate_labeled(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices, by ascending edge mask."""
    if not 1 <= n <= EXHAUSTIVE_LIMIT:
        raise NTooLarge(f"labeled enumeration supports 1 <= n <= {EXHAUSTIVE_LIMIT}, got {n}")
    for mask in range(1 << len(edge_pairs(n))):
        if connected_only and not _mask_connected(n, mask):
            continue
        yield graph_from_mask(n, mask)


# ---------------------------------------------------------------------------
# Column frames: one row per graph, shared by both evaluation routes.


@dataclass
class _Frame:
    n: np.ndarray
    m: np.ndarray
    comps: np.ndarray
    max_deg: np.ndarray
    min_deg: np.ndarray
    comparison: np.ndarray
    # check name -> (satisfied, tight, equality condition)
    checks: dict
    rows: object  # callable: row index -> (n, edge list)


def _components_vec(n: int, adj: np.ndarray) -> np.ndarray:
    size = adj.shape[1]
    remaining = np.full(size, (1 << n) - 1, dtype=np.int64)
    count = np.zeros(size, dtype=np.int64)
    while remaining.any():
        reach = remaining & -remaining
        while True:
            grown = reach.copy()
            for v in range(n):
                grown |= adj[v] & -((reach >> v) & 1)
            if np.array_equal(grown, reach):
                break
            reach = grown
        count += remaining != 0
        remaining &= ~reach
    return count


def _mask_frame(n: int, start: int, stop: int, checks) -> _Frame:
    pairs = edge_pairs(n)
    masks = np.arange(start, stop, dtype=np.int64)
    size = len(masks)
    deg = np.zeros((n, size), dtype=np.int64)
    adj = np.zeros((n, size), dtype=np.int64)
    bits = [(masks >> k) & 1 for k in range(len(pairs))]
    for bit, (i, j) in zip(bits, pairs):
        deg[i] += bit
        deg[j] += bit
        adj[i] |= bit << j
        adj[j] |= bit << i
    m = deg.sum(axis=0) // 2
    m1 = (deg * deg).sum(axis=0)
    m2 = np.zeros(size, dtype=np.int64)
    for bit, (i, j) in zip(bits, pairs):
        m2 += bit * deg[i] * deg[j]
    big, small = deg.max(axis=0), deg.min(axis=0)
    regular = big == small
    nn = np.full(size, n, dtype=np.int64)

    out = {}
    if "m1_lower" in checks:
        diff = m1 * n - 4 * m * m
        out["m1_lower"] = (diff >= 0, diff == 0, regular)
    if "m2_lower" in checks:
        diff = m2 * n * n - 4 * m ** 3
        out["m2_lower"] = (diff >= 0, diff == 0, regular)
    if "common_upper" in checks:
        first = big * n - 2 * m
        second = big * m1 - 2 * m2
        out["common_upper"] = ((first >= 0) & (second >= 0), (first == 0) & (second == 0), regular)
    if "das" in checks:
        if n >= 2:
            diff = m * (2 * m + (n - 2) * big + (big - small) * (n - 1 - big)) - m1 * (n - 1)
            star = (m == n - 1) & (big == n - 1)
            clique = ((deg == big).sum(axis=0) == big + 1) & ((deg == 0).sum(axis=0) == n - 1 - big)
            out["das"] = (diff >= 0, diff == 0, star | regular | clique)
        else:
            true = np.ones(size, dtype=bool)
            out["das"] = (true, true, true)

    def rows(r):
        mask = start + int(r)
        return n, sorted(list(p) for k, p in enumerate(pairs) if mask >> k & 1)

    return _Frame(nn, m, _components_vec(n, adj), big, small, m2 * n - m1 * m, out, rows)


def _graph_frame(graphs: list[Graph], checks) -> _Frame:
    size = len(graphs)
    cols = {k: np.zeros(size, dtype=object) for k in ("n", "m", "comps", "max", "min", "cmp")}
    out = {name: tuple(np.ones(size, dtype=bool) for _ in range(3)) for name in checks}
    for r, g in enumerate(graphs):
        cols["n"][r], cols["m"][r] = g.n, g.m
        cols["comps"][r] = len(components(g))
        cols["max"][r], cols["min"][r] = g.max_degree, g.min_degree
        if g.m == 0:
            cols["cmp"][r] = 0
            continue
        cols["cmp"][r] = second_zagreb(g) * g.n - first_zagreb(g) * g.m
        found = {}
        if "m1_lower" in checks:
            found["m1_lower"] = [bounds.check_m1_lower(g)]
        if "m2_lower" in checks:
            found["m2_lower"] = [bounds.check_m2_lower(g)]
        if "common_upper" in checks:
            found["common_upper"] = list(bounds.check_common_upper(g))
        if "das" in checks:
            found["das"] = [bounds.check_das_upper(g)]
        for name, results in found.items():
            sat, tight, cond = out[name]
            sat[r] = all(c.satisfied for c in results)
            tight[r] = all(c.tight for c in results)
            cond[r] = results[0].equality_condition_met

    def rows(r):
        g = graphs[int(r)]
        return g.n, [list(e) for e in g.edges]

    return _Frame(
        cols["n"].astype(np.int64), cols["m"].astype(np.int64), cols["comps"].astype(np.int64),
        cols["max"].astype(np.int64), cols["min"].astype(np.int64), cols["cmp"], out, rows,
    )


# ---------------------------------------------------------------------------
# Configuration and reports


def parse_class_filter(text: Optional[str]) -> Optional[tuple[str, int]]:
    """``tree``, ``unicyclic``, ``chemical`` or ``k_cyclic:K``."""
    if text is None:
        return None
    name, _, arg = text.partition(":")
    if name in ("tree", "unicyclic", "chemical") and not arg:
        return name, 0
    if name == "k_cyclic" and arg.isdigit():
        return name, int(arg)
    raise ParameterOutOfRange(f"unknown class filter {text!r}")


@dataclass(frozen=True)
class ScanConfig:
    """Exactly one of ``n_max`` (exhaustive, all n in [n_min, n_max]) or
    ``corpus`` (a graph6 file) must be set."""

    n_max: Optional[int] = None
    corpus: Optional[str] = None
    n_min: int = 1
    connected_only: bool = True
    class_filter: Optional[str] = None
    checks: tuple[str, ...] = CHECKS
    jobs: int = 1
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if (self.n_max is None) == (self.corpus is None):
            raise ParameterOutOfRange("set exactly one of n_max or corpus")
        if self.n_max is not None and not 1 <= self.n_min <= self.n_max <= EXHAUSTIVE_LIMIT:
            raise NTooLarge(f"exhaustive scans need 1 <= n_min <= n_max <= {EXHAUSTIVE_LIMIT}")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ParameterOutOfRange(f"unknown checks {sorted(unknown)}")
        parse_class_filter(self.class_filter)
        if self.jobs < 1:
            raise ParameterOutOfRange("jobs must be >= 1")


def _empty_bound_tally():
    return {"checked": 0, "violations": 0, "tight": 0, "tight_mismatches": 0}


@dataclass
class ScanReport:
    """Aggregate results. ``verdicts`` sums to ``total_scanned``; edgeless
    graphs have no defined ratio and are only counted in ``edgeless_skipped``.
    """

    total_scanned: int = 0
    edgeless_skipped: int = 0
    class_counts: dict = field(default_factory=lambda: dict.fromkeys(
        ("connected", "tree", "unicyclic", "chemical", "regular", "star", "cycle"), 0))
    cycle_rank_counts: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=lambda: {v.value: 0 for v in Verdict})
    failure_count: int = 0
    failures: list = field(default_factory=list)
    equality_count: int = 0
    equalities: list = field(default_factory=list)
    chemical_connected_failures: int = 0
    bounds: dict = field(default_factory=dict)

    def merge(self, other: "ScanReport", cap: int) -> None:
        self.total_scanned += other.total_scanned
        self.edgeless_skipped += other.edgeless_skipped
        for key, value in other.class_counts.items():
            self.class_counts[key] += value
        for key, value in other.cycle_rank_counts.items():
            self.cycle_rank_counts[key] = self.cycle_rank_counts.get(key, 0) + value
        for key, value in other.verdicts.items():
            self.verdicts[key] += value
        self.failure_count += other.failure_count
        self.failures.extend(other.failures[: cap - len(self.failures)])
        self.equality_count += other.equality_count
        self.equalities.extend(other.equalities[: cap - len(self.equalities)])
        self.chemical_connected_failures += other.chemical_connected_failures
        for name, tally in other.bounds.items():
            mine = self.bounds.setdefault(name, _empty_bound_tally())
            for key, value in tally.items():
                mine[key] += value

    def to_dict(self) -> dict:
        data = asdict(self)
        data["cycle_rank_counts"] = {str(k): v for k, v in sorted(self.cycle_rank_counts.items())}
        return data

    def bound_violations(self) -> int:
        return sum(t["violations"] for t in self.bounds.values())

    def tight_mismatches(self) -> int:
        return sum(t["tight_mismatches"] for t in self.bounds.values())


def _tally(frame: _Frame, config: ScanConfig) -> ScanReport:
    n, m, comps = frame.n, frame.m, frame.comps
    connected = comps == 1
    rank = m - n + comps
    regular = frame.max_deg == frame.min_deg
    flags = {
        "connected": connected,
        "tree": connected & (rank == 0),
        "unicyclic": connected & (rank == 1),
        "chemical": frame.max_deg <= 4,
        "regular": regular,
        "star": (n >= 2) & (m == n - 1) & (frame.max_deg == n - 1),
        "cycle": connected & (n >= 3) & regular & (frame.max_deg == 2),
    }
    keep = np.ones(len(n), dtype=bool)
    if config.connected_only:
        keep &= connected
    parsed = parse_class_filter(config.class_filter)
    if parsed is not None:
        name, k = parsed
        keep &= (rank == k) if name == "k_cyclic" else flags[name]

    report = ScanReport()
    report.edgeless_skipped = int((keep & (m == 0)).sum())
    keep &= m > 0
    report.total_scanned = int(keep.sum())
    for key, flag in flags.items():
        report.class_counts[key] = int((keep & flag).sum())
    ranks, counts = np.unique(rank[keep], return_counts=True)
    report.cycle_rank_counts = {int(r): int(c) for r, c in zip(ranks, counts)}

    cmp = frame.comparison
    fails = keep & (cmp < 0).astype(bool)
    equal = keep & (cmp == 0).astype(bool)
    report.verdicts = {
        Verdict.HOLDS_STRICT.value: int((keep & (cmp > 0).astype(bool)).sum()),
        Verdict.HOLDS_WITH_EQUALITY.value: int(equal.sum()),
        Verdict.FAILS.value: int(fails.sum()),
    }
    report.failure_count = int(fails.sum())
    report.equality_count = int(equal.sum())
    report.chemical_connected_failures = int((fails & flags["chemical"] & connected).sum())

    def listing(selected):
        out = []
        for r in np.flatnonzero(selected)[: config.cap]:
            size, edges = frame.rows(r)
            out.append({"n": size, "edges": edges})
        return out

    report.failures = listing(fails)
    report.equalities = listing(equal)
    for name in config.checks:
        sat, tight, cond = frame.checks[name]
        report.bounds[name] = {
            "checked": report.total_scanned,
            "violations": int((keep & ~sat).sum()),
            "tight": int((keep & tight).sum()),
            "tight_mismatches": int((keep & (tight != cond)).sum()),
        }
    return report


# ---------------------------------------------------------------------------
# Tasks and drivers


def _exhaustive_tasks(config: ScanConfig):
    for n in range(config.n_min, config.n_max + 1):
        total = 1 << len(edge_pairs(n))
        step = min(total, 1 << CHUNK_BITS)
        for start in range(0, total, step):
            yield ("masks", n, start, start + step)


def _corpus_tasks(path: str):
    with open(path, "rb") as fh:
        batch = []
        for raw in fh:
            raw = raw.rstrip(b"\r\n")
            if not raw.strip():
                continue
            batch.append(raw)
            if len(batch) == CORPUS_BATCH:
                yield ("graph6", batch)
                batch = []
        if batch:
            yield ("graph6", batch)


def _run_task(task, config: ScanConfig) -> ScanReport:
    if task[0] == "masks":
        _, n, start, stop = task
        frame = _mask_frame(n, start, stop, config.checks)
    else:
        frame = _graph_frame([parse_graph6(raw) for raw in task[1]], config.checks)
    return _tally(frame, config)


def _run_task_packed(args):
    return _run_task(*args)


def scan(config: ScanConfig) -> ScanReport:
    """Scan every graph from the configured source.

    The report depends only on the config and source, never on ``jobs``:
    partial reports are merged in task order.
    """
    tasks = _exhaustive_tasks(config) if config.n_max is not None else _corpus_tasks(config.corpus)
    report = ScanReport()
    for name in config.checks:
        report.bounds[name] = _empty_bound_tally()
    if config.jobs == 1:
        parts = (_run_task(task, config) for task in tasks)
        for part in parts:
            report.merge(part, config.cap)
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            packed = ((task, config) for task in tasks)
            for part in pool.map(_run_task_packed, packed, chunksize=1):
                report.merge(part, config.cap)
    return report


def find_min_counterexample(k: int, n_cap: int, exhaustive_limit: int = 7) -> Optional[Graph]:
    """Smallest failing connected graph with cycle rank ``k`` that we can find.

    Exhaustive search covers n up to ``min(n_cap, exhaustive_limit)``; past
    that the C(a_min(k), k) family member is used if it fits within
    ``n_cap``. Trees and unicyclic graphs never fail, so k in {0, 1} gives
    None after the exhaustive pass.
    """
    if k < 0:
        raise ParameterOutOfRange("cycle rank must be >= 0")
    top = min(n_cap, exhaustive_limit, EXHAUSTIVE_LIMIT)
    for n in range(1, top + 1):
        if k > len(edge_pairs(n)) - n + 1:
            continue
        config = ScanConfig(n_min=n, n_max=n, class_filter=f"k_cyclic:{k}", checks=(), cap=1)
        report = scan(config)
        if report.failures:
            first = report.failures[0]
            return build_graph(first["n"], first["edges"])
    if k < 2:
        return None
    result = threshold_a(k)
    g = build_counterexample_family(result.a_min, k)
    return g if g.n <= n_cap else None


__all__ = [
    "CHECKS",
    "ScanConfig",
    "ScanReport",
    "edge_pairs",
    "enumerate_labeled",
    "find_min_counterexample",
    "graph_from_mask",
    "scan",
]
