import pytest
from hypothesis import given

from conftest import DATA, small_networks
from gadgets import DIAMONDS_TEXT
from supportnet import (
    Family,
    GenParams,
    blocks,
    count_family,
    decompose,
    induce_subgraph,
    is_tree_based,
    level,
    min_level_exact,
    min_level_heuristic,
    min_tier,
    random_network,
    tier,
)
from supportnet.formats import parse_network, read_network
from supportnet.network import DisconnectedError
from supportnet.optimize import SearchSpaceTooLarge, level_of_selection
from supportnet.oracle import brute_force_min_level
from supportnet.zigzag import TrailType


def test_tree_blocks_are_bridges():
    tree = random_network(GenParams(5, 0, 4))
    found = blocks(tree)
    assert len(found) == tree.num_edges
    assert all(b.reticulations == 0 for b in found)
    assert level(tree) == 0


def test_single_diamond_is_one_block(crown_net):
    net = parse_network("# phylonet v1\nrho -> x\nrho -> y\nx -> z\ny -> z\nx -> a\ny -> b\nz -> c\n")
    found = blocks(net)
    big = [b for b in found if len(b.edges) > 1]
    assert len(big) == 1 and big[0].reticulations == 1
    assert len(found) == 4
    assert level(crown_net) == 2


def test_two_diamonds_and_a_bridge():
    net = parse_network(DIAMONDS_TEXT, almost_binary=True)
    found = sorted(blocks(net), key=lambda b: min(b.edges))
    assert [len(b.edges) for b in found] == [4, 1, 4]
    assert [b.reticulations for b in found] == [1, 0, 1]
    assert level(net) == 1 and tier(net) == 2


def test_blocks_need_connected_graph(signature_net):
    with pytest.raises(DisconnectedError):
        blocks(induce_subgraph(signature_net, [0, 15]))


def test_min_tier_signature(signature_net):
    sel, rstar = min_tier(signature_net)
    assert rstar == 1
    assert tier(induce_subgraph(signature_net, sel)) == 1


def test_min_tier_on_tree_is_full():
    tree = random_network(GenParams(6, 0, 0))
    sel, rstar = min_tier(tree)
    assert rstar == 0 and len(sel) == tree.num_edges


def test_tier_does_not_determine_level():
    net = read_network(DATA / "tier_vs_level.phylonet")
    sel, rstar = min_tier(net)
    assert rstar == 2
    assert level_of_selection(net, sel) == 1
    assert min_level_exact(net).level == 1


def test_heuristic_gap_instance():
    net = read_network(DATA / "heuristic_gap.phylonet")
    exact = min_level_exact(net)
    heur = min_level_heuristic(net)
    assert (exact.level, heur.level) == (1, 2)
    assert exact.optimal and not heur.optimal
    assert brute_force_min_level(net, cap=40)[0] == 1


def test_search_space_guard():
    net = random_network(GenParams(6, 10, 5))
    size = count_family(net, Family.MINIMAL)
    with pytest.raises(SearchSpaceTooLarge) as err:
        min_level_exact(net, max_space=size - 1)
    assert err.value.size == size


def test_early_stop_on_level_zero():
    tree = random_network(GenParams(4, 0, 1))
    res = min_level_exact(tree)
    assert res.level == 0 and res.candidates == 1


@given(small_networks())
def test_rstar_is_w_fence_count(net):
    dec = decompose(net)
    _, rstar = min_tier(dec)
    assert rstar == dec.count(TrailType.WFENCE)
    assert (rstar == 0) == is_tree_based(dec)


@given(small_networks())
def test_level_bounds(net):
    exact = min_level_exact(net)
    heur = min_level_heuristic(net)
    _, rstar = min_tier(net)
    assert exact.level <= heur.level <= rstar
    assert exact.level == max(exact.block_reticulations)
    assert level_of_selection(net, exact.selection) == exact.level


@given(small_networks(max_edges=20))
def test_exact_matches_brute_force(net):
    assert min_level_exact(net).level == brute_force_min_level(net)[0]


@given(small_networks())
def test_blocks_partition_edges(net):
    found = blocks(net)
    edges = sorted(e for b in found for e in b.edges)
    assert edges == list(range(net.num_edges))
    assert sum(b.reticulations for b in found) == tier(net)
