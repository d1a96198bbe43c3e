import pytest
from hypothesis import given

from conftest import small_networks
from gadgets import trail_gadget
from supportnet import Family, GenParams, count_family, random_network
from supportnet.formats import parse_network
from supportnet.oracle import (
    TooLargeError,
    admissible_masks,
    brute_force_count,
    brute_force_family,
    brute_force_level,
    exhaustive_report,
    family_masks,
    lemma1_check,
    support_network_check,
)


def test_cap_enforced():
    net = random_network(GenParams(6, 8, 0))
    assert net.num_edges > 24
    with pytest.raises(TooLargeError):
        brute_force_count(net, Family.ALL)


def test_signature_ground_truth(signature_net):
    rep = exhaustive_report(signature_net)
    assert rep.counts == {Family.TREES: 0, Family.ALL: 21, Family.MINIMAL: 4, Family.MINIMUM: 4}
    assert rep.min_tier == 1
    assert rep.lemma1.ok


def test_crown_has_two_minimum(crown_net):
    sels = brute_force_family(crown_net, Family.MINIMUM)
    assert len(sels) == 2
    assert brute_force_count(crown_net, Family.TREES) == 2


def test_full_set_is_support(signature_net):
    full = (1 << signature_net.num_edges) - 1
    assert support_network_check(signature_net, full).is_support
    # dropping a leaf edge loses a leaf
    assert not support_network_check(signature_net, full ^ (1 << 15)).is_support


def test_parallel_smoothing_is_flagged():
    text = "# phylonet v1\nrho -> u\nrho -> y\nu -> v\nu -> w\nv -> w\nv -> z\ny -> z\ny -> b\nw -> a\nz -> c\n"
    net = parse_network(text)
    full = (1 << net.num_edges) - 1
    drop_vz = [e for e in range(net.num_edges) if net.names[net.tails[e]] == "v" and net.names[net.heads[e]] == "z"]
    check = support_network_check(net, full ^ (1 << drop_vz[0]))
    assert check.is_support and check.parallel
    assert lemma1_check(net).parallel_flagged >= 1


def test_brute_force_level_on_masks(crown_net):
    full = (1 << crown_net.num_edges) - 1
    assert brute_force_level(crown_net, full) == 2


def test_restricted_to_trail():
    net, edges = trail_gadget("crown", 6)
    assert len(family_masks(net, Family.ALL, edges=edges)) == 18
    with pytest.raises(ValueError):
        family_masks(net, Family.TREES, edges=edges)


@given(small_networks())
def test_oracle_agrees_with_formulas(net):
    for fam in Family:
        assert count_family(net, fam) == brute_force_count(net, fam)


@given(small_networks())
def test_admissible_masks_keep_forced_edges(net):
    masks = admissible_masks(net)
    for e in range(net.num_edges):
        if net.outdeg(net.tails[e]) == 1 or net.indeg(net.heads[e]) == 1:
            assert all((int(m) >> e) & 1 for m in masks)


@given(small_networks(max_edges=20))
def test_lemma1_holds(net):
    assert lemma1_check(net).ok
