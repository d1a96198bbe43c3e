"""Family sizes over random networks with r = 2(n - 1), as min / max / median per n.

Usage: python scripts/run_family_sizes.py [--n 3-10] [--seeds 100] [--csv out.csv]
"""

import argparse

from supportnet.cli import parse_int_list
from supportnet.experiment import ExperimentConfig, rows_to_csv, run_experiment, summarize_counts


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=parse_int_list, default=parse_int_list("3-10"))
    ap.add_argument("--seeds", type=int, default=100)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--csv", default=None, help="also write every row")
    args = ap.parse_args()
    rows = run_experiment(ExperimentConfig(args.n, seeds=args.seeds, levels=False, jobs=args.jobs))
    summary = summarize_counts(rows)
    print(f"{'n':>3} {'r':>3}  {'family':<8} {'min':>12} {'max':>14} {'median':>12}")
    for n, cols in summary.items():
        for col, name in (("countA", "all"), ("countB", "minimal"), ("countC", "minimum")):
            lo, hi, med = cols[col]
            print(f"{n:>3} {2 * (n - 1):>3}  {name:<8} {lo:>12} {hi:>14} {med:>12g}")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(rows_to_csv(rows))


if __name__ == "__main__":
    main()
