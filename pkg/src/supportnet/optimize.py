"""Reticulation (tier) and level minimisation over support networks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .families import Family, count_family, enumerate_family, trail_options
from .network import (
    DisconnectedError,
    EdgeSelection,
    GraphView,
    NetworkError,
    PhyloNetwork,
    induce_subgraph,
    tier,
)
from .zigzag import TrailDecomposition, TrailType, decompose

DEFAULT_MAX_SPACE = 10**8


class SearchSpaceTooLarge(NetworkError, RuntimeError):
    def __init__(self, family: Family, size: int, bound: int):
        self.family = family
        self.size = size
        self.bound = bound
        super().__init__(f"|{family.value}| = {size} exceeds the search bound {bound}")


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: tuple[int, ...]

    @property
    def reticulations(self) -> int:
        return len(self.edges) - len(self.vertices) + 1


@dataclass(frozen=True)
class LevelResult:
    selection: EdgeSelection
    level: int
    blocks: tuple[Block, ...]
    method: str
    optimal: bool
    candidates: int

    @property
    def block_reticulations(self) -> list[int]:
        return [b.reticulations for b in self.blocks]


def _edge_blocks(tails: Sequence[int], heads: Sequence[int], edges: Sequence[int]) -> list[Block]:
    """Bridge-free components of the undirected graph on ``edges``, plus one
    block per bridge. Raises if the edges do not form a connected graph."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in edges:
        u, v = tails[e], heads[e]
        adj.setdefault(u, []).append((v, e))
        adj.setdefault(v, []).append((u, e))
    if not adj:
        raise DisconnectedError("empty graph")

    order: dict[int, int] = {}
    low: dict[int, int] = {}
    bridges: set[int] = set()
    start = next(iter(adj))
    order[start] = low[start] = 0
    counter = 1
    # iterative DFS; frames are (vertex, edge used to enter it, neighbour cursor)
    stack = [(start, -1, iter(adj[start]))]
    while stack:
        v, via, it = stack[-1]
        advanced = False
        for w, e in it:
            if e == via:
                continue
            if w in order:
                if order[w] < low[v]:
                    low[v] = order[w]
            else:
                order[w] = low[w] = counter
                counter += 1
                stack.append((w, e, iter(adj[w])))
                advanced = True
                break
        if advanced:
            continue
        stack.pop()
        if stack:
            parent = stack[-1][0]
            if low[v] < low[parent]:
                low[parent] = low[v]
            if low[v] > order[parent]:
                bridges.add(via)
    if len(order) != len(adj):
        raise DisconnectedError("graph is not connected")

    blocks: list[Block] = []
    comp: dict[int, int] = {}
    for s in adj:
        if s in comp:
            continue
        # flood fill over non-bridge edges
        cid = len(blocks)
        comp[s] = cid
        verts = [s]
        block_edges: list[int] = []
        todo = [s]
        while todo:
            u = todo.pop()
            for w, e in adj[u]:
                if e in bridges:
                    continue
                if u == tails[e]:
                    block_edges.append(e)
                if w not in comp:
                    comp[w] = cid
                    verts.append(w)
                    todo.append(w)
        blocks.append(Block(frozenset(verts), tuple(sorted(block_edges))))
    # isolated single vertices are not blocks of their own
    blocks = [b for b in blocks if b.edges]
    for e in sorted(bridges):
        blocks.append(Block(frozenset((tails[e], heads[e])), (e,)))
    blocks.sort(key=lambda b: b.edges[0])
    return blocks


def blocks(graph: GraphView | PhyloNetwork) -> list[Block]:
    """Partition a connected graph's edges into maximal bridge-free blocks."""
    if isinstance(graph, PhyloNetwork):
        graph = graph.view()
    net = graph.network
    return _edge_blocks(net.tails, net.heads, graph.edges)


def level(graph: GraphView | PhyloNetwork) -> int:
    return max((b.reticulations for b in blocks(graph)), default=0)


def _selection_level(network: PhyloNetwork, selection: EdgeSelection) -> int:
    found = _edge_blocks(network.tails, network.heads, selection.indices())
    return max(b.reticulations for b in found)


def min_tier(network: PhyloNetwork | TrailDecomposition) -> tuple[EdgeSelection, int]:
    """A support network with the fewest reticulations, and that number.

    Takes the first least-weight option of every trail; the optimum equals
    the number of W-fences.
    """
    dec = network if isinstance(network, TrailDecomposition) else decompose(network)
    net = dec.network
    flags = bytearray(b"0" * net.num_edges)
    for t in dec.trails:
        first = next(iter(trail_options(t, Family.MINIMUM)))
        for e, b in zip(t.edges, first):
            if b:
                flags[e] = 49
    selection = EdgeSelection.from_flags(net, flags)
    rstar = tier(induce_subgraph(net, selection))
    wfences = dec.count(TrailType.WFENCE)
    if rstar != wfences:
        raise AssertionError(f"tier {rstar} differs from W-fence count {wfences}")
    return selection, rstar


def _search(
    network: PhyloNetwork,
    family: Family,
    method: str,
    max_space: int | None,
) -> LevelResult:
    dec = decompose(network)
    size = count_family(dec, family)
    if max_space is not None and size > max_space:
        raise SearchSpaceTooLarge(family, size, max_space)
    best: EdgeSelection | None = None
    best_level = -1
    seen = 0
    for sel in enumerate_family(dec, family):
        seen += 1
        lv = _selection_level(network, sel)
        if best is None or lv < best_level:
            best, best_level = sel, lv
            if lv == 0:
                break
    assert best is not None
    found = tuple(blocks(induce_subgraph(network, best)))
    return LevelResult(best, best_level, found, method, method == "exact", seen)


def min_level_exact(network: PhyloNetwork, max_space: int | None = DEFAULT_MAX_SPACE) -> LevelResult:
    """Least level over all support networks, found by scanning the minimal ones.

    Shrinking a support network to a minimal one never raises the level, so
    the minimal family always contains an optimum. Ties go to the first
    candidate in enumeration order.
    """
    return _search(network, Family.MINIMAL, "exact", max_space)


def min_level_heuristic(network: PhyloNetwork, max_space: int | None = DEFAULT_MAX_SPACE) -> LevelResult:
    """Least level over minimum-tier support networks only; an upper bound."""
    return _search(network, Family.MINIMUM, "heuristic", max_space)


def level_of_selection(network: PhyloNetwork, selection: EdgeSelection | Iterable[int]) -> int:
    return level(induce_subgraph(network, selection))
