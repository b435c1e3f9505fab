import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from zagreb.graph import build_graph

DATA = Path(__file__).parent / "data"


@st.composite
def graphs(draw, min_n=0, max_n=12, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected and n:
        # Spanning path through a random vertex order guarantees connectivity.
        order = draw(st.permutations(range(n)))
        extra = {tuple(sorted((order[k], order[k + 1]))) for k in range(n - 1)}
        chosen = sorted(set(chosen) | extra)
    return build_graph(n, chosen)


def random_graph(rng: random.Random, n: int, p: float):
    return build_graph(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float):
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[k], rng.choice(order[:k])))) for k in range(1, n)}
    edges |= {(i, j) for j in range(n) for i in range(j) if rng.random() < p}
    return build_graph(n, sorted(edges))


@pytest.fixture
def corpus_path():
    return DATA / "corpus100.g6"


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
