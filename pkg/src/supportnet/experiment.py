"""Batch experiments over seeded random networks, emitted as CSV."""

from __future__ import annotations

import csv
import io
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .families import Family, count_family
from .optimize import SearchSpaceTooLarge, min_level_exact, min_level_heuristic, min_tier
from .randgen import GenParams, random_network
from .zigzag import decompose

COLUMNS = ["n", "r", "seed", "countA", "countB", "countC", "rstar", "level_exact", "level_heur"]
TIMING_COLUMNS = ["t_exact", "t_heur"]


@dataclass
class ExperimentConfig:
    n_values: list[int]
    r_values: list[int] | None = None  # None: r = 2(n - 1)
    seeds: int = 100
    seed_offset: int = 0
    levels: bool = True
    max_space: int | None = 10**6
    jobs: int = 1

    def instances(self) -> list[tuple[int, int, int]]:
        out = []
        for n in self.n_values:
            rs = self.r_values if self.r_values is not None else [2 * (n - 1)]
            for r in rs:
                for s in range(self.seed_offset, self.seed_offset + self.seeds):
                    out.append((n, r, s))
        return out


@dataclass
class Row:
    n: int
    r: int
    seed: int
    countA: int
    countB: int
    countC: int
    rstar: int
    level_exact: int | None = None
    level_heur: int | None = None
    t_exact: float | None = None
    t_heur: float | None = None
    extra: dict = field(default_factory=dict)


def run_instance(n: int, r: int, seed: int, levels: bool = True, max_space: int | None = 10**6) -> Row:
    net = random_network(GenParams(n, r, seed))
    dec = decompose(net)
    _, rstar = min_tier(dec)
    row = Row(
        n,
        r,
        seed,
        count_family(dec, Family.ALL),
        count_family(dec, Family.MINIMAL),
        count_family(dec, Family.MINIMUM),
        rstar,
    )
    if levels:
        try:
            t0 = time.perf_counter()
            row.level_exact = min_level_exact(net, max_space=max_space).level
            row.t_exact = time.perf_counter() - t0
        except SearchSpaceTooLarge:
            pass
        try:
            t0 = time.perf_counter()
            row.level_heur = min_level_heuristic(net, max_space=max_space).level
            row.t_heur = time.perf_counter() - t0
        except SearchSpaceTooLarge:
            pass
    return row


def _run(args: tuple) -> Row:
    return run_instance(*args)


def run_experiment(config: ExperimentConfig) -> list[Row]:
    tasks = [(n, r, s, config.levels, config.max_space) for n, r, s in config.instances()]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            rows = list(pool.map(_run, tasks, chunksize=8))
    else:
        rows = [_run(t) for t in tasks]
    rows.sort(key=lambda row: (row.n, row.r, row.seed))
    return rows


def _cell(value) -> str:
    if value is None:
        return "NA"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def rows_to_csv(rows: list[Row], timings: bool = False) -> str:
    cols = COLUMNS + (TIMING_COLUMNS if timings else [])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for row in rows:
        writer.writerow([_cell(getattr(row, c)) for c in cols])
    return buf.getvalue()


def summarize_counts(rows: list[Row]) -> dict[int, dict[str, tuple[int, int, float]]]:
    """Per leaf count: (min, max, median) of each family count."""
    by_n: dict[int, list[Row]] = {}
    for row in rows:
        by_n.setdefault(row.n, []).append(row)
    out = {}
    for n, group in sorted(by_n.items()):
        out[n] = {}
        for col in ("countA", "countB", "countC"):
            vals = [getattr(r, col) for r in group]
            out[n][col] = (min(vals), max(vals), statistics.median(vals))
    return out


def heuristic_match_rate(rows: list[Row]) -> float:
    both = [r for r in rows if r.level_exact is not None and r.level_heur is not None]
    if not both:
        return float("nan")
    return sum(r.level_exact == r.level_heur for r in both) / len(both)
