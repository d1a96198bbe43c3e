"""Wall time of decompose, count_family and min_tier as |E| grows.

Usage: python scripts/bench_linear.py [--sizes 1000,10000,100000]
"""

import argparse
import time

from supportnet import Family, GenParams, count_family, decompose, min_tier, random_network


def network_with_edges(size: int, seed: int = 0):
    r = size // 3
    while (size - 3 * r) % 2 or (size - 3 * r) < 2:
        r -= 1
    return random_network(GenParams((size - 3 * r) // 2 + 1, r, seed))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="1000,10000,100000")
    args = ap.parse_args()
    print(f"{'|E|':>8} {'decompose':>10} {'count all':>10} {'count min':>10} {'min_tier':>10}")
    for size in (int(s) for s in args.sizes.split(",")):
        net = network_with_edges(size)
        t0 = time.perf_counter()
        dec = decompose(net)
        t1 = time.perf_counter()
        count_family(dec, Family.ALL)
        t2 = time.perf_counter()
        count_family(dec, Family.MINIMAL)
        t3 = time.perf_counter()
        min_tier(dec)
        t4 = time.perf_counter()
        print(f"{net.num_edges:>8} {t1 - t0:>10.4f} {t2 - t1:>10.4f} {t3 - t2:>10.4f} {t4 - t3:>10.4f}")


if __name__ == "__main__":
    main()
