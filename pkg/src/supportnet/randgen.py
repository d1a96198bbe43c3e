"""Seeded random rooted binary phylogenetic networks.

Sampler: grow a rooted binary tree by attaching leaves one at a time to a
uniformly chosen edge (or above the root), then add ``r`` reticulation edges.
Each reticulation edge subdivides two distinct edges and joins the new vertex
on the topologically earlier edge to the new vertex on the later one.

Topological order is tracked with exact rational keys; a new vertex gets the
midpoint of its edge's end keys, so every edge always points from a smaller
key to a larger one and no cycle can form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .network import NetworkError, PhyloNetwork, validate_network


class InfeasibleParams(NetworkError, ValueError):
    pass


class RetryExhausted(NetworkError, RuntimeError):
    pass


@dataclass(frozen=True)
class GenParams:
    n: int
    r: int
    seed: int = 0
    max_retries: int = 1000


def random_network(params: GenParams | None = None, *, n: int | None = None, r: int | None = None, seed: int = 0) -> PhyloNetwork:
    """Sample a network with ``n`` leaves and ``r`` reticulations.

    Call as ``random_network(GenParams(n, r, seed))`` or with keywords.
    """
    if params is None:
        if n is None or r is None:
            raise TypeError("give GenParams or both n and r")
        params = GenParams(n, r, seed)
    if params.n < 2:
        raise InfeasibleParams(f"need at least 2 leaves, got n={params.n}")
    if params.r < 0:
        raise InfeasibleParams(f"negative reticulation count r={params.r}")
    rng = random.Random(params.seed)

    # vertex 0 is the root; edges as [tail, head] lists mutated in place
    is_leaf = [False, True, True]
    edges = [[0, 1], [0, 2]]
    root = 0
    for _ in range(params.n - 2):
        # 2k-1 attachment points for k leaves: every edge plus above the root
        pick = rng.randrange(len(edges) + 1)
        if pick == len(edges):
            new_leaf, new_root = len(is_leaf), len(is_leaf) + 1
            is_leaf.extend([True, False])
            edges.append([new_root, root])
            edges.append([new_root, new_leaf])
            root = new_root
        else:
            a, b = edges[pick]
            mid, new_leaf = len(is_leaf), len(is_leaf) + 1
            is_leaf.extend([False, True])
            edges[pick] = [a, mid]
            edges.append([mid, b])
            edges.append([mid, new_leaf])

    # preorder positions are a topological order of the tree
    children: list[list[int]] = [[] for _ in is_leaf]
    for a, b in edges:
        children[a].append(b)
    key: list[Fraction] = [Fraction(0)] * len(is_leaf)
    stack = [root]
    pos = 0
    while stack:
        v = stack.pop()
        key[v] = Fraction(pos)
        pos += 1
        stack.extend(reversed(children[v]))

    added = 0
    retries = 0
    while added < params.r:
        i = rng.randrange(len(edges))
        j = rng.randrange(len(edges))
        if i != j:
            ai, bi = edges[i]
            aj, bj = edges[j]
            ki = (key[ai] + key[bi]) / 2
            kj = (key[aj] + key[bj]) / 2
            if ki > kj:
                i, j, ki, kj = j, i, kj, ki
            if ki < kj:
                a, b = edges[i]
                c, d = edges[j]
                u, w = len(key), len(key) + 1
                key.extend([ki, kj])
                is_leaf.extend([False, False])
                edges[i] = [a, u]
                edges[j] = [c, w]
                edges.extend([[u, b], [w, d], [u, w]])
                added += 1
                retries = 0
                continue
        retries += 1
        if retries > params.max_retries:
            raise RetryExhausted(f"gave up after {retries} degenerate picks")

    # name vertices in topological order so output is stable and readable
    order = sorted(range(len(key)), key=lambda v: (key[v], v))
    names = {}
    leaf_no = internal_no = 0
    for v in order:
        if v == root:
            names[v] = "rho"
        elif is_leaf[v]:
            leaf_no += 1
            names[v] = f"L{leaf_no}"
        else:
            internal_no += 1
            names[v] = f"v{internal_no}"
    rank = {v: i for i, v in enumerate(order)}
    edges.sort(key=lambda uv: (rank[uv[0]], rank[uv[1]]))
    return validate_network(
        [names[v] for v in order],
        [(names[u], names[v]) for u, v in edges],
    )
