"""Rooted binary phylogenetic networks: data model, validation, subgraph views,
smoothing and tier counting.

Vertices are dense integer handles ``0..|V|-1`` with a side table of names.
Edges are identified by their canonical index, which is the order in which
they were supplied.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence


class NetworkError(Exception):
    """Base class for domain errors raised by this package."""


class UnknownVertexError(NetworkError, KeyError):
    pass


class EmptySelectionError(NetworkError, ValueError):
    pass


class DisconnectedError(NetworkError, ValueError):
    pass


class ViolationKind(str, enum.Enum):
    EMPTY = "Empty"
    CYCLIC = "Cyclic"
    NO_ROOT = "NoRoot"
    MULTIPLE_ROOTS = "MultipleRoots"
    BAD_ROOT_DEGREE = "BadRootDegree"
    UNLABELED_LEAF = "UnlabeledLeaf"
    LABELED_NON_LEAF = "LabeledNonLeaf"
    DUPLICATE_LABEL = "DuplicateLabel"
    DEGREE_VIOLATION = "DegreeViolation"
    PARALLEL_EDGE = "ParallelEdge"
    SELF_LOOP = "SelfLoop"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    message: str
    vertices: tuple[str, ...] = ()
    edges: tuple[int, ...] = ()

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.message}"


class ValidationError(NetworkError, ValueError):
    """Raised by :func:`validate_network`; ``violations`` lists every failed axiom."""

    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))

    @property
    def kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}


class VertexKind(str, enum.Enum):
    ROOT = "root"
    LEAF = "leaf"
    TREE = "tree"
    RETICULATION = "reticulation"
    PASSTHROUGH = "passthrough"


def kind_from_degrees(indeg: int, outdeg: int) -> VertexKind:
    """Vertex kind as a pure function of its degrees.

    Almost-binary ``(2, 2)`` vertices count as reticulations (indegree two).
    """
    if indeg == 0:
        return VertexKind.ROOT
    if outdeg == 0:
        return VertexKind.LEAF
    if indeg == 1 and outdeg == 1:
        return VertexKind.PASSTHROUGH
    if indeg == 1:
        return VertexKind.TREE
    return VertexKind.RETICULATION


class DirectedEdge(NamedTuple):
    tail: int
    head: int
    index: int


class PhyloNetwork:
    """An immutable, validated rooted phylogenetic network.

    Construct through :func:`validate_network` (or the text parser); the
    constructor itself performs no checks.
    """

    def __init__(
        self,
        names: Sequence[str],
        tails: Sequence[int],
        heads: Sequence[int],
        leaf_labels: Mapping[int, str],
        root: int,
        almost_binary: bool = False,
    ):
        self.names = tuple(names)
        self.tails = tuple(tails)
        self.heads = tuple(heads)
        self.leaf_labels = dict(leaf_labels)
        self.root = root
        self.almost_binary = almost_binary
        out_edges: list[list[int]] = [[] for _ in self.names]
        in_edges: list[list[int]] = [[] for _ in self.names]
        for e, (u, v) in enumerate(zip(self.tails, self.heads)):
            out_edges[u].append(e)
            in_edges[v].append(e)
        self.out_edges = tuple(tuple(x) for x in out_edges)
        self.in_edges = tuple(tuple(x) for x in in_edges)
        self._index = {name: i for i, name in enumerate(self.names)}

    @property
    def num_vertices(self) -> int:
        return len(self.names)

    @property
    def num_edges(self) -> int:
        return len(self.tails)

    @property
    def vertices(self) -> range:
        return range(len(self.names))

    @property
    def edges(self) -> list[DirectedEdge]:
        return [DirectedEdge(u, v, e) for e, (u, v) in enumerate(zip(self.tails, self.heads))]

    def edge(self, e: int) -> DirectedEdge:
        return DirectedEdge(self.tails[e], self.heads[e], e)

    def vertex_id(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVertexError(name) from None

    def indeg(self, v: int) -> int:
        return len(self.in_edges[v])

    def outdeg(self, v: int) -> int:
        return len(self.out_edges[v])

    @property
    def leaves(self) -> list[int]:
        return sorted(self.leaf_labels)

    @property
    def reticulations(self) -> list[int]:
        return [v for v in self.vertices if len(self.in_edges[v]) == 2]

    def edge_label(self, e: int) -> str:
        return f"{self.names[self.tails[e]]} -> {self.names[self.heads[e]]}"

    def view(self) -> GraphView:
        return GraphView(self, tuple(range(self.num_edges)))

    def __repr__(self) -> str:
        return (
            f"PhyloNetwork(|V|={self.num_vertices}, |E|={self.num_edges}, "
            f"leaves={len(self.leaf_labels)}, reticulations={len(self.reticulations)})"
        )


def validate_network(
    vertices: Iterable[str],
    edges: Iterable[tuple[str, str]],
    leaf_labels: Mapping[str, str] | None = None,
    almost_binary: bool = False,
) -> PhyloNetwork:
    """Check the network axioms and build a :class:`PhyloNetwork`.

    ``leaf_labels`` maps vertex names to labels; when omitted, every vertex
    of outdegree 0 is a leaf labelled by its own name. With
    ``almost_binary=True`` passthrough ``(1,1)`` and ``(2,2)`` vertices and
    indegree-2 leaves are accepted.

    Raises :class:`ValidationError` carrying every violation found.
    """
    names: list[str] = []
    index: dict[str, int] = {}

    def vid(name: str) -> int:
        if name not in index:
            index[name] = len(names)
            names.append(name)
        return index[name]

    for name in vertices:
        vid(name)
    edge_list = list(edges)
    tails: list[int] = []
    heads: list[int] = []
    problems: list[Violation] = []
    seen: dict[tuple[int, int], int] = {}
    for e, (a, b) in enumerate(edge_list):
        u, v = vid(a), vid(b)
        if u == v:
            problems.append(Violation(ViolationKind.SELF_LOOP, f"edge {e} ({a} -> {a})", (a,), (e,)))
            continue
        if (u, v) in seen:
            problems.append(
                Violation(
                    ViolationKind.PARALLEL_EDGE,
                    f"edges {seen[(u, v)]} and {e} both join {a} -> {b}",
                    (a, b),
                    (seen[(u, v)], e),
                )
            )
            continue
        seen[(u, v)] = e
        tails.append(u)
        heads.append(v)

    if not tails:
        problems.append(Violation(ViolationKind.EMPTY, "network has no edges"))
        raise ValidationError(problems)

    n = len(names)
    indeg = [0] * n
    outdeg = [0] * n
    for u, v in zip(tails, heads):
        outdeg[u] += 1
        indeg[v] += 1

    cyclic = _cyclic_vertices(n, tails, heads)
    if cyclic:
        problems.append(
            Violation(
                ViolationKind.CYCLIC,
                f"{len(cyclic)} vertices lie on or behind a directed cycle",
                tuple(names[v] for v in cyclic),
            )
        )

    roots = [v for v in range(n) if indeg[v] == 0]
    root = roots[0] if roots else -1
    if not roots:
        problems.append(Violation(ViolationKind.NO_ROOT, "no vertex of indegree 0"))
    elif len(roots) > 1:
        problems.append(
            Violation(
                ViolationKind.MULTIPLE_ROOTS,
                f"{len(roots)} vertices of indegree 0",
                tuple(names[v] for v in roots),
            )
        )
    for r in roots:
        if outdeg[r] not in (1, 2):
            problems.append(
                Violation(
                    ViolationKind.BAD_ROOT_DEGREE,
                    f"root {names[r]} has outdegree {outdeg[r]}",
                    (names[r],),
                )
            )

    leaves = [v for v in range(n) if outdeg[v] == 0 and indeg[v] > 0]
    max_leaf_in = 2 if almost_binary else 1
    for v in range(n):
        if indeg[v] == 0:
            continue
        if outdeg[v] == 0:
            ok = indeg[v] <= max_leaf_in
        elif almost_binary:
            ok = indeg[v] <= 2 and outdeg[v] <= 2
        else:
            ok = (indeg[v], outdeg[v]) in ((1, 2), (2, 1))
        if not ok:
            problems.append(
                Violation(
                    ViolationKind.DEGREE_VIOLATION,
                    f"{names[v]} has (indeg, outdeg) = ({indeg[v]}, {outdeg[v]})",
                    (names[v],),
                )
            )

    labels: dict[int, str] = {}
    if leaf_labels is None:
        labels = {v: names[v] for v in leaves}
    else:
        for name, label in leaf_labels.items():
            if name not in index:
                problems.append(
                    Violation(ViolationKind.LABELED_NON_LEAF, f"label for unknown vertex {name}", (name,))
                )
                continue
            v = index[name]
            if outdeg[v] != 0:
                problems.append(
                    Violation(ViolationKind.LABELED_NON_LEAF, f"{name} is labelled but not a leaf", (name,))
                )
            else:
                labels[v] = label
        for v in leaves:
            if v not in labels:
                problems.append(
                    Violation(ViolationKind.UNLABELED_LEAF, f"leaf {names[v]} has no label", (names[v],))
                )
    counts: dict[str, int] = {}
    for label in labels.values():
        counts[label] = counts.get(label, 0) + 1
    dup = sorted(k for k, c in counts.items() if c > 1)
    if dup:
        problems.append(Violation(ViolationKind.DUPLICATE_LABEL, f"repeated labels {dup}", tuple(dup)))

    if problems:
        raise ValidationError(problems)
    return PhyloNetwork(names, tails, heads, labels, root, almost_binary=almost_binary)


def _cyclic_vertices(n: int, tails: Sequence[int], heads: Sequence[int]) -> list[int]:
    # Kahn's algorithm; whatever is never released sits on or below a cycle.
    indeg = [0] * n
    succ: list[list[int]] = [[] for _ in range(n)]
    for u, v in zip(tails, heads):
        succ[u].append(v)
        indeg[v] += 1
    queue = deque(v for v in range(n) if indeg[v] == 0)
    done = 0
    while queue:
        u = queue.popleft()
        done += 1
        for w in succ[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if done == n:
        return []
    return [v for v in range(n) if indeg[v] > 0]


@dataclass(frozen=True)
class EdgeSelection:
    """A subset of a network's edges as a bitmask over canonical indices.

    Bit ``i`` of ``bits`` is set iff edge ``i`` is selected.
    """

    network: PhyloNetwork = field(repr=False, compare=True)
    bits: int

    @classmethod
    def from_indices(cls, network: PhyloNetwork, indices: Iterable[int]) -> EdgeSelection:
        flags = bytearray(b"0" * network.num_edges)
        for e in indices:
            flags[e] = 49  # ord("1")
        return cls.from_flags(network, flags)

    @classmethod
    def from_flags(cls, network: PhyloNetwork, flags: bytearray | bytes) -> EdgeSelection:
        """Build from an ASCII ``b"0"``/``b"1"`` buffer indexed by edge."""
        if not flags:
            return cls(network, 0)
        return cls(network, int(bytes(flags[::-1]), 2))

    @classmethod
    def full(cls, network: PhyloNetwork) -> EdgeSelection:
        return cls(network, (1 << network.num_edges) - 1)

    def indices(self) -> list[int]:
        bits = self.bits
        s = bin(bits)[2:][::-1]
        return [i for i, c in enumerate(s) if c == "1"]

    def bitstring(self) -> str:
        """Edge ``0`` first."""
        return format(self.bits, f"0{self.network.num_edges}b")[::-1]

    def __contains__(self, e: int) -> bool:
        return (self.bits >> e) & 1 == 1

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __iter__(self):
        return iter(self.indices())


class GraphView:
    """The subgraph ``N[S]`` induced by a set of edges of a network.

    Its vertex set is the set of ends of the selected edges; degrees are
    measured inside the view.
    """

    def __init__(self, network: PhyloNetwork, edges: Sequence[int]):
        self.network = network
        self.edges = tuple(edges)
        tails, heads = network.tails, network.heads
        self._indeg: dict[int, int] = {}
        self._outdeg: dict[int, int] = {}
        for e in self.edges:
            u, v = tails[e], heads[e]
            self._outdeg[u] = self._outdeg.get(u, 0) + 1
            self._indeg[v] = self._indeg.get(v, 0) + 1
        self.vertices = frozenset(self._indeg) | frozenset(self._outdeg)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.network.tails[e], self.network.heads[e]

    def _check(self, v: int) -> None:
        if v not in self.vertices:
            raise UnknownVertexError(v)

    def indeg(self, v: int) -> int:
        self._check(v)
        return self._indeg.get(v, 0)

    def outdeg(self, v: int) -> int:
        self._check(v)
        return self._outdeg.get(v, 0)

    def is_spanning(self) -> bool:
        return len(self.vertices) == self.network.num_vertices

    def is_connected(self) -> bool:
        if not self.edges:
            return False
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for e in self.edges:
            u, v = self.endpoints(e)
            adj[u].append(v)
            adj[v].append(u)
        start = next(iter(self.vertices))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def selection(self) -> EdgeSelection:
        return EdgeSelection.from_indices(self.network, self.edges)


def induce_subgraph(network: PhyloNetwork, selection: EdgeSelection | Iterable[int]) -> GraphView:
    if isinstance(selection, EdgeSelection):
        edges = selection.indices()
    else:
        edges = sorted(set(selection))
    if not edges:
        raise EmptySelectionError("selection contains no edges")
    return GraphView(network, edges)


def classify_vertex(graph: PhyloNetwork | GraphView, v: int) -> VertexKind:
    if isinstance(graph, PhyloNetwork) and not 0 <= v < graph.num_vertices:
        raise UnknownVertexError(v)
    return kind_from_degrees(graph.indeg(v), graph.outdeg(v))


class TierMismatchError(NetworkError, AssertionError):
    pass


def tier_report(graph: PhyloNetwork | GraphView) -> tuple[int, int]:
    """``(|E| - |V| + 1, number of indegree-2 vertices)`` of a connected graph."""
    if isinstance(graph, PhyloNetwork):
        graph = graph.view()
    if not graph.is_connected():
        raise DisconnectedError("tier is defined for connected graphs only")
    cyclomatic = graph.num_edges - graph.num_vertices + 1
    indeg2 = sum(1 for v in graph.vertices if graph._indeg.get(v, 0) == 2)
    return cyclomatic, indeg2


def tier(graph: PhyloNetwork | GraphView) -> int:
    """Reticulation number ``|E| - |V| + 1``.

    Cross-checked against the number of indegree-2 vertices, which must agree
    for any subgraph of an (almost-)binary network with a single source.
    """
    cyclomatic, indeg2 = tier_report(graph)
    if cyclomatic != indeg2:
        raise TierMismatchError(f"|E|-|V|+1 = {cyclomatic} but {indeg2} vertices have indegree 2")
    return cyclomatic


@dataclass(frozen=True)
class SmoothingResult:
    """Graph left after suppressing every indegree-1/outdegree-1 vertex.

    ``edges[i]`` is a ``(tail, head)`` pair of vertex ids of the original
    network and ``provenance[i]`` lists the original edge indices it replaces,
    in path order. ``parallel`` holds pairs of base-edge positions joining the
    same ordered vertex pair.
    """

    network: PhyloNetwork
    vertices: frozenset[int]
    edges: tuple[tuple[int, int], ...]
    provenance: tuple[tuple[int, ...], ...]
    parallel: tuple[tuple[int, int], ...]

    @property
    def has_parallel_edges(self) -> bool:
        return bool(self.parallel)

    def degrees(self) -> tuple[dict[int, int], dict[int, int]]:
        indeg = {v: 0 for v in self.vertices}
        outdeg = {v: 0 for v in self.vertices}
        for u, v in self.edges:
            outdeg[u] += 1
            indeg[v] += 1
        return indeg, outdeg


def smooth(graph: GraphView | SmoothingResult) -> SmoothingResult:
    """Suppress passthrough vertices, contracting each chain to one edge."""
    if isinstance(graph, GraphView):
        network = graph.network
        items = [(network.tails[e], network.heads[e], (e,)) for e in graph.edges]
        vertices = graph.vertices
    else:
        network = graph.network
        items = [(u, v, p) for (u, v), p in zip(graph.edges, graph.provenance)]
        vertices = graph.vertices

    indeg = {v: 0 for v in vertices}
    outdeg = {v: 0 for v in vertices}
    out_items: dict[int, list[int]] = {v: [] for v in vertices}
    for i, (u, v, _) in enumerate(items):
        outdeg[u] += 1
        indeg[v] += 1
        out_items[u].append(i)

    def passthrough(v: int) -> bool:
        return indeg[v] == 1 and outdeg[v] == 1

    kept = frozenset(v for v in vertices if not passthrough(v))
    edges: list[tuple[int, int]] = []
    provenance: list[tuple[int, ...]] = []
    for i, (u, v, prov) in enumerate(items):
        if u not in kept:
            continue
        path = list(prov)
        while v not in kept:
            (j,) = out_items[v]
            _, v, more = items[j]
            path.extend(more)
        edges.append((u, v))
        provenance.append(tuple(path))

    first: dict[tuple[int, int], int] = {}
    parallel: list[tuple[int, int]] = []
    for i, pair in enumerate(edges):
        if pair in first:
            parallel.append((first[pair], i))
        else:
            first[pair] = i
    return SmoothingResult(network, kept, tuple(edges), tuple(provenance), tuple(parallel))
