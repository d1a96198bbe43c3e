"""Plain-text network files and DOT export.

File grammar::

    # phylonet v1
    # any further comment lines
    TAIL -> HEAD
    ...
    leaves: NAME NAME ...      (optional; default = all outdegree-0 vertices)

Vertex names use ``[A-Za-z0-9_.-]``. Edge line order fixes the canonical edge
indices. Blank lines are ignored.
"""

from __future__ import annotations

import re

from .network import (
    EdgeSelection,
    NetworkError,
    PhyloNetwork,
    ValidationError,
    induce_subgraph,
    validate_network,
)
from .zigzag import TrailDecomposition

HEADER = "# phylonet v1"
_NAME = r"[A-Za-z0-9_.\-]+"
_EDGE_RE = re.compile(rf"^\s*({_NAME})\s*->\s*({_NAME})\s*$")
_LEAVES_RE = re.compile(rf"^\s*leaves:((?:\s+{_NAME})*)\s*$")


class ParseError(NetworkError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class BadHeader(ParseError):
    pass


class BadEdgeLine(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class ValidationFailed(ParseError):
    def __init__(self, error: ValidationError):
        self.report = error
        super().__init__(f"invalid network: {error}")


def parse_network(text: str, almost_binary: bool = False) -> PhyloNetwork:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise BadHeader(f"first line must be {HEADER!r}", 1)
    edges: list[tuple[str, str]] = []
    seen: dict[tuple[str, str], int] = {}
    leaves: list[str] | None = None
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if leaves is not None:
            raise BadEdgeLine("nothing may follow the leaves: trailer", lineno)
        m = _LEAVES_RE.match(line)
        if m:
            leaves = m.group(1).split()
            continue
        m = _EDGE_RE.match(line)
        if not m:
            raise BadEdgeLine(f"cannot parse {raw!r}", lineno)
        tail, head = m.groups()
        if tail == head:
            raise BadEdgeLine(f"self-loop on {tail}", lineno)
        if (tail, head) in seen:
            raise DuplicateEdge(f"{tail} -> {head} already on line {seen[(tail, head)]}", lineno)
        seen[(tail, head)] = lineno
        edges.append((tail, head))
    vertices: list[str] = []
    for tail, head in edges:
        vertices.append(tail)
        vertices.append(head)
    labels = None if leaves is None else {name: name for name in leaves}
    try:
        return validate_network(vertices, edges, labels, almost_binary=almost_binary)
    except ValidationError as err:
        raise ValidationFailed(err) from err


def read_network(path: str, almost_binary: bool = False) -> PhyloNetwork:
    with open(path, encoding="utf-8") as fh:
        return parse_network(fh.read(), almost_binary=almost_binary)


def write_network(network: PhyloNetwork) -> str:
    out = [HEADER]
    names = network.names
    for u, v in zip(network.tails, network.heads):
        out.append(f"{names[u]} -> {names[v]}")
    out.append("leaves: " + " ".join(sorted(network.leaf_labels[v] for v in network.leaves)))
    return "\n".join(out) + "\n"


_TRAIL_COLORS = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(
    network: PhyloNetwork,
    selection: EdgeSelection | None = None,
    decomposition: TrailDecomposition | None = None,
) -> str:
    """DOT digraph: unselected edges dashed, reticulations of the selected
    subgraph filled red, trails coloured when a decomposition is given."""
    names = network.names
    if selection is None:
        view = network.view()
        chosen = None
    else:
        view = induce_subgraph(network, selection)
        chosen = selection
    red = {v for v in view.vertices if view.indeg(v) == 2}
    lines = ["digraph N {", "  node [shape=circle];"]
    for v in network.vertices:
        attrs = []
        if v in network.leaf_labels:
            attrs.append("shape=box")
            attrs.append(f"label={_quote(network.leaf_labels[v])}")
        if v in red:
            attrs.append("style=filled")
            attrs.append('fillcolor="red"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(names[v])}{suffix};")
    for e in range(network.num_edges):
        attrs = [f"label={_quote('e' + str(e))}"]
        if chosen is not None and e not in chosen:
            attrs.append("style=dashed")
        if decomposition is not None:
            tid, _ = decomposition.edge_to_trail[e]
            attrs.append(f"color={_quote(_TRAIL_COLORS[tid % len(_TRAIL_COLORS)])}")
        u, v = network.tails[e], network.heads[e]
        lines.append(f"  {_quote(names[u])} -> {_quote(names[v])} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
