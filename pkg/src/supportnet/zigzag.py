"""Maximal zig-zag trail decomposition.

Two edges are *tail siblings* when they leave the same vertex and *head
siblings* when they enter the same vertex. In a network whose vertices have
in- and outdegree at most two, every edge has at most one sibling of each
kind, so the sibling relation splits the edge set into alternating paths
(fences) and alternating cycles (crowns). Those components are the maximal
zig-zag trails, and the split is unique.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .network import PhyloNetwork


class TrailType(str, enum.Enum):
    CROWN = "crown"
    NFENCE = "N-fence"
    MFENCE = "M-fence"
    WFENCE = "W-fence"

    @property
    def is_fence(self) -> bool:
        return self is not TrailType.CROWN


@dataclass(frozen=True)
class Trail:
    """One maximal zig-zag trail, edges in trail order.

    ``starts_with_tail`` tells whether ``edges[0]`` and ``edges[1]`` share a
    tail (``False`` means they share a head); consecutive links alternate.
    It is ``None`` for single-edge trails.
    """

    index: int
    edges: tuple[int, ...]
    kind: TrailType
    starts_with_tail: bool | None

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def terminals(self) -> tuple[int, int] | None:
        if self.kind is TrailType.CROWN:
            return None
        return self.edges[0], self.edges[-1]

    def link_is_tail(self, i: int) -> bool:
        """Whether ``edges[i]`` and ``edges[i + 1]`` (cyclically) share a tail."""
        return self.starts_with_tail == (i % 2 == 0)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class TrailDecomposition:
    network: PhyloNetwork
    trails: tuple[Trail, ...]
    # edge index -> (trail index, position in trail)
    edge_to_trail: tuple[tuple[int, int], ...]

    @property
    def signature(self) -> Counter:
        return Counter((t.kind, t.size) for t in self.trails)

    def count(self, kind: TrailType) -> int:
        return sum(1 for t in self.trails if t.kind is kind)

    def __len__(self) -> int:
        return len(self.trails)

    def __iter__(self):
        return iter(self.trails)


def sibling_tables(network: PhyloNetwork) -> tuple[list[int], list[int]]:
    """Per edge, the index of its tail sibling and head sibling (``-1`` if none)."""
    m = network.num_edges
    tail_sib = [-1] * m
    head_sib = [-1] * m
    for outs in network.out_edges:
        if len(outs) == 2:
            a, b = outs
            tail_sib[a] = b
            tail_sib[b] = a
    for ins in network.in_edges:
        if len(ins) == 2:
            a, b = ins
            head_sib[a] = b
            head_sib[b] = a
    return tail_sib, head_sib


def _walk(start: int, first_tail: bool, tail_sib: list[int], head_sib: list[int]) -> tuple[list[int], bool]:
    # Follow alternating links from ``start``; report whether we came back.
    out: list[int] = []
    use_tail = first_tail
    e = start
    while True:
        nxt = tail_sib[e] if use_tail else head_sib[e]
        if nxt < 0:
            return out, False
        if nxt == start:
            return out, True
        out.append(nxt)
        e = nxt
        use_tail = not use_tail


def decompose(network: PhyloNetwork) -> TrailDecomposition:
    """Split ``E(network)`` into its maximal zig-zag trails in linear time.

    Trails are numbered by their smallest edge index. A fence is read from
    whichever end edge has the smaller index; a crown starts at its smallest
    edge and continues to that edge's tail sibling.
    """
    tail_sib, head_sib = sibling_tables(network)
    m = network.num_edges
    owner = [-1] * m
    trails: list[Trail] = []
    for seed in range(m):
        if owner[seed] >= 0:
            continue
        forward, closed = _walk(seed, True, tail_sib, head_sib)
        if closed:
            edges = [seed] + forward
            starts_tail = True
            kind = TrailType.CROWN
        else:
            backward, _ = _walk(seed, False, tail_sib, head_sib)
            backward.reverse()
            edges = backward + [seed] + forward
            if edges[-1] < edges[0]:
                edges.reverse()
            if len(edges) == 1:
                starts_tail = None
            else:
                starts_tail = tail_sib[edges[0]] == edges[1]
            kind = _fence_type(len(edges), starts_tail)
        tid = len(trails)
        for e in edges:
            owner[e] = tid
        trails.append(Trail(tid, tuple(edges), kind, starts_tail))

    edge_to_trail = [(0, 0)] * m
    for t in trails:
        for pos, e in enumerate(t.edges):
            edge_to_trail[e] = (t.index, pos)
    return TrailDecomposition(network, tuple(trails), tuple(edge_to_trail))


def _fence_type(size: int, starts_with_tail: bool | None) -> TrailType:
    if size % 2 == 1:
        return TrailType.NFENCE
    return TrailType.MFENCE if starts_with_tail else TrailType.WFENCE


def classify_trail(network: PhyloNetwork, edges: Sequence[int]) -> TrailType:
    """Type of a maximal trail given as an edge sequence in trail order."""
    edges = list(edges)
    if len(edges) == 1:
        return TrailType.NFENCE
    tail_sib, head_sib = sibling_tables(network)
    first, last = edges[0], edges[-1]
    if len(edges) >= 4 and len(edges) % 2 == 0 and last in (tail_sib[first], head_sib[first]):
        return TrailType.CROWN
    return _fence_type(len(edges), tail_sib[first] == edges[1])
