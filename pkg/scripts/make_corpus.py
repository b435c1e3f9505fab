"""Write a graph6 corpus produced by networkx (an independent encoder).

    python scripts/make_corpus.py tests/data/corpus100.g6

Lines: every 13th graph of the networkx atlas (all graphs up to 7 nodes),
then random G(n, p) graphs, a few with n >= 63 to exercise the long size
prefix.
"""

import argparse
import random

import networkx as nx


def corpus_lines(count: int = 100, seed: int = 20081021) -> list[bytes]:
    rng = random.Random(seed)
    atlas = nx.graph_atlas_g()
    lines = [nx.to_graph6_bytes(g, header=False).rstrip(b"\n") for g in atlas[::13]]
    lines = lines[: count - 20]
    while len(lines) < count:
        n = rng.choice([rng.randint(8, 40), rng.randint(63, 90)])
        g = nx.gnp_random_graph(n, rng.uniform(0.05, 0.6), seed=rng.randrange(2**32))
        lines.append(nx.to_graph6_bytes(g, header=False).rstrip(b"\n"))
    return lines


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("out")
    parser.add_argument("--count", type=int, default=100)
    args = parser.parse_args()
    with open(args.out, "wb") as fh:
        fh.write(b"\n".join(corpus_lines(args.count)) + b"\n")


if __name__ == "__main__":
    main()
