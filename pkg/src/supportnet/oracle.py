"""Exhaustive ground truth for small networks.

Nothing here looks at zig-zag trails. Admissibility is checked straight from
the edge conditions on ``N``:

* every edge whose tail has outdegree 1 or whose head has indegree 1 is kept;
* of any two edges sharing a tail or sharing a head, at least one is kept.

Subsets are enumerated over the edges not forced by the first rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .families import Family
from .network import EdgeSelection, NetworkError, PhyloNetwork, kind_from_degrees, VertexKind

DEFAULT_CAP = 24


class TooLargeError(NetworkError, ValueError):
    pass


def _forced_and_pairs(
    network: PhyloNetwork, edges: Sequence[int] | None = None
) -> tuple[list[int], list[int], list[tuple[int, int]]]:
    # degrees are always those of N; only edges of the subgraph take part
    members = range(network.num_edges) if edges is None else sorted(set(edges))
    inside = set(members)
    forced, free = [], []
    for e in members:
        u, v = network.tails[e], network.heads[e]
        if network.outdeg(u) == 1 or network.indeg(v) == 1:
            forced.append(e)
        else:
            free.append(e)
    pairs = []
    for full_group in network.out_edges + network.in_edges:
        group = [e for e in full_group if e in inside]
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                pairs.append((group[i], group[j]))
    return forced, free, pairs


def _check_cap(network: PhyloNetwork, cap: int, edges: Sequence[int] | None = None) -> None:
    size = network.num_edges if edges is None else len(set(edges))
    if size > cap:
        raise TooLargeError(f"{size} edges exceed the oracle cap {cap}")


def admissible_masks(network: PhyloNetwork, cap: int = DEFAULT_CAP, edges: Sequence[int] | None = None) -> np.ndarray:
    """All subsets of ``edges`` (default: every edge) satisfying both
    conditions, as sorted int64 bitmasks over the network's edge indices."""
    _check_cap(network, cap, edges)
    if network.num_edges > 62:
        raise TooLargeError("bitmasks are limited to 62 edges")
    forced, free, pairs = _forced_and_pairs(network, edges)
    base = 0
    for e in forced:
        base |= 1 << e
    codes = np.arange(1 << len(free), dtype=np.int64)
    masks = np.full(codes.shape, base, dtype=np.int64)
    for j, e in enumerate(free):
        masks |= ((codes >> j) & 1) << e
    ok = np.ones(codes.shape, dtype=bool)
    for a, b in pairs:
        ok &= (((masks >> a) | (masks >> b)) & 1).astype(bool)
    return np.sort(masks[ok])


def _popcount(masks: np.ndarray) -> np.ndarray:
    counts = np.zeros(masks.shape, dtype=np.int64)
    work = masks.copy()
    while np.any(work):
        counts += work & 1
        work >>= 1
    return counts


def family_masks(
    network: PhyloNetwork, family: Family, cap: int = DEFAULT_CAP, edges: Sequence[int] | None = None
) -> np.ndarray:
    """Members of ``family`` among subsets of ``edges`` (default: all of ``E``)."""
    family = Family(family)
    masks = admissible_masks(network, cap, edges)
    if family is Family.ALL:
        return masks
    if family is Family.MINIMUM:
        sizes = _popcount(masks)
        return masks[sizes == sizes.min()]
    if family is Family.MINIMAL:
        # Admissibility is preserved under adding edges, so S has an
        # admissible proper subset iff dropping a single edge keeps it admissible.
        admissible = set(masks.tolist())
        keep = []
        for s in masks.tolist():
            minimal = True
            rest = s
            while rest:
                low = rest & -rest
                rest ^= low
                if (s ^ low) in admissible:
                    minimal = False
                    break
            keep.append(minimal)
        return masks[np.array(keep, dtype=bool)]
    if edges is not None:
        raise ValueError("support trees are only defined on the whole network")
    # support trees: no vertex of indegree 2 survives
    keep = []
    for s in masks.tolist():
        keep.append(all(((s >> a) & 1) + ((s >> b) & 1) < 2 for a, b in _in_pairs(network)))
    return masks[np.array(keep, dtype=bool)] if keep else masks[:0]


def _in_pairs(network: PhyloNetwork) -> list[tuple[int, int]]:
    return [tuple(g) for g in network.in_edges if len(g) == 2]


def brute_force_family(network: PhyloNetwork, family: Family, cap: int = DEFAULT_CAP) -> set[EdgeSelection]:
    return {EdgeSelection(network, int(s)) for s in family_masks(network, family, cap)}


def brute_force_count(network: PhyloNetwork, family: Family, cap: int = DEFAULT_CAP) -> int:
    return int(len(family_masks(network, family, cap)))


# --- definitional support-network test ------------------------------------


@dataclass(frozen=True)
class SupportCheck:
    is_support: bool
    parallel: bool
    reason: str = ""


def support_network_check(network: PhyloNetwork, mask: int) -> SupportCheck:
    """Decide from first principles whether ``N[S]`` is a support network.

    ``N[S]`` must span ``N``; after suppressing its indegree-1/outdegree-1
    vertices it must have one root of outdegree 1 or 2, exactly the leaves of
    ``N`` as its sinks, and legal degrees elsewhere. A smoothing that creates
    parallel edges is accepted and flagged.
    """
    n = network.num_vertices
    indeg = [0] * n
    outdeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    edges = [e for e in range(network.num_edges) if (mask >> e) & 1]
    for e in edges:
        u, v = network.tails[e], network.heads[e]
        outdeg[u] += 1
        indeg[v] += 1
        out[u].append(v)
    touched = [indeg[v] + outdeg[v] > 0 for v in range(n)]
    if not all(touched):
        return SupportCheck(False, False, "not spanning")

    def passthrough(v: int) -> bool:
        return indeg[v] == 1 and outdeg[v] == 1

    kept = [v for v in range(n) if not passthrough(v)]
    base_edges = []
    for u in kept:
        for v in out[u]:
            while passthrough(v):
                (v,) = out[v]
            base_edges.append((u, v))
    parallel = len(set(base_edges)) != len(base_edges)
    bin_ = [0] * n
    bout = [0] * n
    for u, v in base_edges:
        bout[u] += 1
        bin_[v] += 1
    roots = [v for v in kept if bin_[v] == 0]
    if len(roots) != 1:
        return SupportCheck(False, parallel, "root count")
    if bout[roots[0]] not in (1, 2):
        return SupportCheck(False, parallel, "root degree")
    sinks = {v for v in kept if bout[v] == 0}
    if sinks != set(network.leaf_labels):
        return SupportCheck(False, parallel, "leaf set")
    allowed = {VertexKind.TREE, VertexKind.RETICULATION}
    for v in kept:
        if v == roots[0] or v in sinks:
            continue
        if kind_from_degrees(bin_[v], bout[v]) not in allowed:
            return SupportCheck(False, parallel, "degree")
        if not network.almost_binary and (bin_[v], bout[v]) == (2, 2):
            return SupportCheck(False, parallel, "degree")
    return SupportCheck(True, parallel, "")


@dataclass
class Lemma1Report:
    checked: int = 0
    discrepancies: list[int] = field(default_factory=list)
    parallel_flagged: int = 0

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def lemma1_check(network: PhyloNetwork, cap: int = DEFAULT_CAP) -> Lemma1Report:
    """Compare edge-condition admissibility with :func:`support_network_check`.

    Runs over every subset that keeps the forced edges, plus, for each forced
    edge, the full edge set with that edge dropped.
    """
    _check_cap(network, cap)
    forced, free, pairs = _forced_and_pairs(network)
    admissible = set(admissible_masks(network, cap).tolist())
    base = sum(1 << e for e in forced)
    full = (1 << network.num_edges) - 1
    candidates = []
    for code in range(1 << len(free)):
        s = base
        for j, e in enumerate(free):
            if (code >> j) & 1:
                s |= 1 << e
        candidates.append(s)
    candidates.extend(full ^ (1 << e) for e in forced)
    report = Lemma1Report()
    for s in candidates:
        check = support_network_check(network, s)
        report.checked += 1
        if check.is_support and check.parallel:
            report.parallel_flagged += 1
        if check.is_support != (s in admissible):
            report.discrepancies.append(s)
    return report


# --- level ----------------------------------------------------------------


def _connected_without(nv_edges: list[tuple[int, int]], skip: int, a: int, b: int) -> bool:
    adj: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(nv_edges):
        if i == skip:
            continue
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen = {a}
    stack = [a]
    while stack:
        x = stack.pop()
        if x == b:
            return True
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def brute_force_level(network: PhyloNetwork, mask: int) -> int:
    """Level of ``N[S]``: an edge is a bridge iff deleting it separates its
    ends; blocks are the components of the non-bridge edges."""
    edges = [(network.tails[e], network.heads[e]) for e in range(network.num_edges) if (mask >> e) & 1]
    cycle_edges = [
        (u, v) for i, (u, v) in enumerate(edges) if _connected_without(edges, i, u, v)
    ]
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in cycle_edges:
        parent[find(u)] = find(v)
    nedges: dict[int, int] = {}
    nverts: dict[int, int] = {}
    for u, v in cycle_edges:
        r = find(u)
        nedges[r] = nedges.get(r, 0) + 1
    for x in list(parent):
        r = find(x)
        nverts[r] = nverts.get(r, 0) + 1
    return max((nedges[r] - nverts[r] + 1 for r in nedges), default=0)


def brute_force_min_level(network: PhyloNetwork, cap: int = DEFAULT_CAP) -> tuple[int, EdgeSelection]:
    """Least level over every support network; ties go to the smallest bitmask."""
    best_level, best_mask = None, None
    for s in admissible_masks(network, cap).tolist():
        lv = brute_force_level(network, s)
        if best_level is None or lv < best_level:
            best_level, best_mask = lv, s
    return best_level, EdgeSelection(network, best_mask)


@dataclass
class ExhaustiveReport:
    counts: dict[Family, int]
    selections: dict[Family, list[list[int]]]
    min_tier: int
    min_level: int
    lemma1: Lemma1Report


def exhaustive_report(network: PhyloNetwork, cap: int = DEFAULT_CAP) -> ExhaustiveReport:
    counts, selections = {}, {}
    for fam in Family:
        masks = family_masks(network, fam, cap).tolist()
        counts[fam] = len(masks)
        selections[fam] = sorted(EdgeSelection(network, s).indices() for s in masks)
    all_masks = admissible_masks(network, cap)
    # tier of a spanning subgraph is |S| - |V| + 1
    min_tier = int(_popcount(all_masks).min()) - network.num_vertices + 1
    lv, _ = brute_force_min_level(network, cap)
    return ExhaustiveReport(counts, selections, min_tier, lv, lemma1_check(network, cap))
