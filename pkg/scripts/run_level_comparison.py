"""Exact vs minimum-family level search: agreement rate and run time by r.

Usage: python scripts/run_level_comparison.py [--n 8] [--r 1-12] [--seeds 100]
"""

import argparse
import statistics

from supportnet.cli import parse_int_list
from supportnet.experiment import ExperimentConfig, heuristic_match_rate, run_experiment


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--r", type=parse_int_list, default=parse_int_list("1-12"))
    ap.add_argument("--seeds", type=int, default=100)
    ap.add_argument("--max-space", type=int, default=10**6)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    rows = run_experiment(
        ExperimentConfig([args.n], args.r, seeds=args.seeds, max_space=args.max_space, jobs=args.jobs)
    )
    print(f"{'r':>3} {'solved':>6} {'match':>6} {'gap':>4} {'t_exact ms':>11} {'t_heur ms':>10}")
    for r in args.r:
        group = [row for row in rows if row.r == r and row.level_exact is not None and row.level_heur is not None]
        if not group:
            print(f"{r:>3} {0:>6}")
            continue
        gaps = sum(row.level_heur > row.level_exact for row in group)
        te = statistics.median(row.t_exact for row in group) * 1e3
        th = statistics.median(row.t_heur for row in group) * 1e3
        print(f"{r:>3} {len(group):>6} {heuristic_match_rate(group):>6.2f} {gaps:>4} {te:>11.2f} {th:>10.2f}")
    print(f"overall match rate: {heuristic_match_rate(rows):.3f}")


if __name__ == "__main__":
    main()
