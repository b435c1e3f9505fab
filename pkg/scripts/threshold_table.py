"""Table of the smallest a for which C(a, b) violates M1/n <= M2/m.

    python scripts/threshold_table.py --b-max 30
"""

import argparse

from zagreb.families import build_counterexample_family, threshold_a, threshold_root
from zagreb.indices import compare_indices


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--b-max", type=int, default=20)
    args = parser.parse_args()
    print(f"{'b':>3} {'D':>8} {'root':>12} {'a_min':>6} {'n':>5} {'m':>5} {'M2*n-M1*m':>10}")
    for b in range(2, args.b_max + 1):
        result = threshold_a(b)
        report = compare_indices(build_counterexample_family(result.a_min, b))
        print(f"{b:>3} {result.discriminant:>8} {float(threshold_root(b)):>12.6f} "
              f"{result.a_min:>6} {report.n:>5} {report.m:>5} {report.comparison:>10}")


if __name__ == "__main__":
    main()
