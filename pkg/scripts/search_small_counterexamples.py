"""Look for connected graphs with a given cycle rank that violate
M1/n <= M2/m, exhaustively up to --n-max vertices (8 takes minutes),
then fall back to the C(a, b) family.

    python scripts/search_small_counterexamples.py --k 2 --n-max 8
"""

import argparse
import time

from zagreb.enumeration import ScanConfig, find_min_counterexample, scan
from zagreb.graph_io import write_graph6
from zagreb.indices import compare_indices


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k", type=int, default=2, help="cycle rank")
    parser.add_argument("--n-max", type=int, default=7)
    parser.add_argument("--n-cap", type=int, default=100)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    for n in range(1, args.n_max + 1):
        t0 = time.perf_counter()
        report = scan(ScanConfig(n_min=n, n_max=n, class_filter=f"k_cyclic:{args.k}",
                                 checks=(), jobs=args.jobs, cap=5))
        print(f"n={n}: {report.total_scanned} connected graphs with cycle rank {args.k}, "
              f"{report.failure_count} failing [{time.perf_counter() - t0:.1f}s]")
    g = find_min_counterexample(args.k, args.n_cap, exhaustive_limit=args.n_max)
    if g is None:
        print("no counterexample found within the cap")
    else:
        r = compare_indices(g)
        print(f"smallest found: n={g.n} m={g.m} M1={r.m1} M2={r.m2} "
              f"M2*n-M1*m={r.comparison} graph6={write_graph6(g).decode()}")


if __name__ == "__main__":
    main()
