"""Randomised search for small networks showing two level phenomena.

* base tier 2 but base level 1;
* the minimum-family heuristic misses the optimal level.

Usage: python scripts/find_witnesses.py [--start SEED] [--tries K] [--max-edges M]
"""

import argparse

from supportnet import GenParams, min_level_exact, min_level_heuristic, min_tier, random_network
from supportnet.formats import write_network


def search(start: int, tries: int, max_edges: int = 40, n_values=(3, 4, 5, 6), r_values=range(2, 13)):
    tier_gap = heur_gap = None
    for seed in range(start, start + tries):
        for n in n_values:
            for r in r_values:
                net = random_network(GenParams(n, r, seed))
                if net.num_edges > max_edges:
                    continue
                exact = min_level_exact(net).level
                if tier_gap is None and min_tier(net)[1] == 2 and exact == 1:
                    tier_gap = (n, r, seed, net)
                if heur_gap is None and min_level_heuristic(net).level > exact:
                    heur_gap = (n, r, seed, net)
                if tier_gap and heur_gap:
                    return tier_gap, heur_gap
    return tier_gap, heur_gap


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--start", type=int, default=0)
    parser.add_argument("--tries", type=int, default=200)
    parser.add_argument("--max-edges", type=int, default=40)
    args = parser.parse_args()
    for label, found in zip(("r*=2, level*=1", "heuristic > exact"), search(args.start, args.tries, args.max_edges)):
        if found is None:
            print(f"# {label}: none found")
            continue
        n, r, seed, net = found
        print(f"# {label}: n={n} r={r} seed={seed}")
        print(write_network(net))


if __name__ == "__main__":
    main()
