import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import small_networks
from supportnet import (
    EdgeSelection,
    ValidationError,
    VertexKind,
    classify_vertex,
    induce_subgraph,
    smooth,
    tier,
    validate_network,
)
from supportnet.families import Family, enumerate_family
from supportnet.formats import parse_network
from supportnet.network import (
    DisconnectedError,
    EmptySelectionError,
    UnknownVertexError,
    ViolationKind,
    kind_from_degrees,
    tier_report,
)


def test_single_edge_network():
    net = validate_network(["rho", "a"], [("rho", "a")])
    assert net.num_edges == 1
    assert net.leaf_labels == {net.vertex_id("a"): "a"}
    assert net.root == net.vertex_id("rho")


def test_indegree_three_is_degree_violation():
    edges = [("rho", "x"), ("rho", "y"), ("x", "z"), ("y", "z"), ("x", "w"), ("w", "z"), ("y", "u"), ("z", "a")]
    with pytest.raises(ValidationError) as err:
        validate_network([], edges)
    assert ViolationKind.DEGREE_VIOLATION in err.value.kinds


def test_two_sources_is_multiple_roots():
    with pytest.raises(ValidationError) as err:
        validate_network([], [("r1", "a"), ("r2", "b")])
    assert ViolationKind.MULTIPLE_ROOTS in err.value.kinds


def test_report_lists_every_violation():
    edges = [("a", "b"), ("b", "c"), ("c", "a"), ("x", "x"), ("a", "b")]
    with pytest.raises(ValidationError) as err:
        validate_network([], edges)
    kinds = err.value.kinds
    assert {ViolationKind.CYCLIC, ViolationKind.SELF_LOOP, ViolationKind.PARALLEL_EDGE} <= kinds


def test_root_degree_and_labels():
    with pytest.raises(ValidationError) as err:
        validate_network([], [("rho", "a"), ("rho", "b"), ("rho", "c")])
    assert ViolationKind.BAD_ROOT_DEGREE in err.value.kinds
    with pytest.raises(ValidationError) as err:
        validate_network([], [("rho", "a"), ("rho", "b")], leaf_labels={"a": "A"})
    assert ViolationKind.UNLABELED_LEAF in err.value.kinds


def test_passthrough_needs_almost_binary_flag():
    edges = [("rho", "x"), ("x", "a")]
    with pytest.raises(ValidationError):
        validate_network([], edges)
    net = validate_network([], edges, almost_binary=True)
    assert classify_vertex(net, net.vertex_id("x")) is VertexKind.PASSTHROUGH


@pytest.mark.parametrize(
    "degrees, kind",
    [
        ((0, 2), VertexKind.ROOT),
        ((0, 1), VertexKind.ROOT),
        ((2, 1), VertexKind.RETICULATION),
        ((1, 0), VertexKind.LEAF),
        ((1, 2), VertexKind.TREE),
        ((1, 1), VertexKind.PASSTHROUGH),
    ],
)
def test_kind_table(degrees, kind):
    assert kind_from_degrees(*degrees) is kind


def test_classify_vertex(signature_net):
    net = signature_net
    assert classify_vertex(net, net.root) is VertexKind.ROOT
    assert classify_vertex(net, net.vertex_id("r1")) is VertexKind.RETICULATION
    assert classify_vertex(net, net.vertex_id("a")) is VertexKind.LEAF
    assert classify_vertex(net, net.vertex_id("t1")) is VertexKind.TREE
    with pytest.raises(UnknownVertexError):
        classify_vertex(net, 999)
    view = induce_subgraph(net, [0])
    with pytest.raises(UnknownVertexError):
        view.indeg(net.vertex_id("a"))


def test_tier_values(cherry, crown_net):
    assert tier(cherry) == 0
    assert tier(crown_net) == 2
    # |E| = |V|: a diamond
    diamond = validate_network([], [("rho", "x"), ("rho", "y"), ("x", "z"), ("y", "z"), ("z", "a")], almost_binary=True)
    assert diamond.num_edges - diamond.num_vertices == 0
    assert tier(diamond) == 1


def test_tier_disconnected(signature_net):
    net = signature_net
    far = [net.vertex_id(x) for x in ("r3", "r4")]
    edges = [net.in_edges[far[0]][0], net.in_edges[far[1]][0]]
    with pytest.raises(DisconnectedError):
        tier(induce_subgraph(net, edges))


def test_induce_subgraph_basics(signature_net):
    net = signature_net
    full = induce_subgraph(net, EdgeSelection.full(net))
    assert full.vertices == frozenset(net.vertices)
    assert full.num_edges == net.num_edges
    one = induce_subgraph(net, [3])
    assert one.num_vertices == 2 and one.num_edges == 1
    with pytest.raises(EmptySelectionError):
        induce_subgraph(net, [])


def test_minimum_selection_on_signature_network_has_one_reticulation(signature_net):
    sel = next(enumerate_family(signature_net, Family.MINIMUM))
    view = induce_subgraph(signature_net, sel)
    assert view.is_spanning()
    assert sum(1 for v in view.vertices if view.indeg(v) == 2) == 1


def test_smooth_path():
    net = validate_network([], [("rho", "x"), ("x", "a")], almost_binary=True)
    res = smooth(net.view())
    assert res.edges == ((net.vertex_id("rho"), net.vertex_id("a")),)
    assert res.provenance == ((0, 1),)


def test_smooth_identity(cherry):
    res = smooth(cherry.view())
    assert res.vertices == frozenset(cherry.vertices)
    assert len(res.edges) == 2 and not res.has_parallel_edges


def test_smooth_triangle_gadget_flags_parallel_edge():
    # u -> v, u -> w, v -> w; v also feeds reticulation z, whose edge we drop
    text = "# phylonet v1\nrho -> u\nrho -> y\nu -> v\nu -> w\nv -> w\nv -> z\ny -> z\ny -> b\nw -> a\nz -> c\n"
    net = parse_network(text)
    drop = net.out_edges[net.vertex_id("v")]
    vz = [e for e in drop if net.heads[e] == net.vertex_id("z")][0]
    view = induce_subgraph(net, [e for e in range(net.num_edges) if e != vz])
    res = smooth(view)
    assert res.has_parallel_edges
    u, w = net.vertex_id("u"), net.vertex_id("w")
    (i, j), = res.parallel
    assert res.edges[i] == res.edges[j] == (u, w)
    assert sorted(res.provenance[i] + res.provenance[j]) == sorted(
        [net.out_edges[u][0], net.out_edges[u][1], net.in_edges[w][1]]
    )


@given(small_networks())
def test_tier_counts_reticulations(net):
    cyclomatic, indeg2 = tier_report(net)
    assert cyclomatic == indeg2 == len(net.reticulations)


@given(small_networks(), st.integers(0, 50))
def test_smooth_idempotent(net, pick):
    sels = list(enumerate_family(net, Family.ALL, limit=pick + 1))
    res = smooth(induce_subgraph(net, sels[pick % len(sels)]))
    again = smooth(res)
    assert again.edges == res.edges
    assert again.vertices == res.vertices
    assert again.provenance == res.provenance


@given(small_networks(), st.randoms(use_true_random=False))
def test_validation_independent_of_edge_order(net, rnd):
    edges = [(net.names[u], net.names[v]) for u, v in zip(net.tails, net.heads)]
    rnd.shuffle(edges)
    again = validate_network([], edges)
    assert again.num_edges == net.num_edges
    assert sorted(again.leaf_labels.values()) == sorted(net.leaf_labels.values())


def test_invalid_stays_invalid_when_permuted():
    edges = [("rho", "a"), ("rho", "b"), ("a", "c"), ("b", "c"), ("a", "d"), ("b", "d")]
    rnd = random.Random(3)
    for _ in range(10):
        rnd.shuffle(edges)
        with pytest.raises(ValidationError):
            validate_network([], edges)


@given(small_networks())
def test_admissible_selections_span(net):
    for sel in enumerate_family(net, Family.ALL, limit=40):
        assert induce_subgraph(net, sel).is_spanning()


def test_edge_selection_roundtrip(signature_net):
    sel = EdgeSelection.from_indices(signature_net, [0, 3, 15])
    assert sel.indices() == [0, 3, 15]
    assert len(sel) == 3 and 3 in sel and 4 not in sel
    assert sel.bitstring() == "1001" + "0" * 11 + "1"
