"""Re-check the known positive cases of M1/n <= M2/m on every labeled
connected graph up to --n-max vertices: trees (equality only for stars),
unicyclic graphs (equality only for cycles) and chemical graphs.

    python scripts/verify_known_results.py --n-max 7 --jobs 4
"""

import argparse
import time

from zagreb.enumeration import ScanConfig, scan


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=7)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    expected_equality = {"tree": "star", "unicyclic": "cycle", "chemical": None}
    for cls, eq_class in expected_equality.items():
        t0 = time.perf_counter()
        report = scan(ScanConfig(n_max=args.n_max, class_filter=cls, jobs=args.jobs))
        line = (f"{cls:>10}: scanned={report.total_scanned:>9} fails={report.failure_count} "
                f"equalities={report.equality_count}")
        if eq_class:
            line += f" {eq_class}s={report.class_counts[eq_class]}"
        line += f" violations={report.bound_violations()} [{time.perf_counter() - t0:.1f}s]"
        print(line)


if __name__ == "__main__":
    main()
