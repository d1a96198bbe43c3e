import pytest
from hypothesis import given
from hypothesis import strategies as st

from supportnet import GenParams, random_network, tier
from supportnet.formats import write_network
from supportnet.randgen import InfeasibleParams


def test_two_leaf_tree_is_cherry():
    net = random_network(GenParams(2, 0, 0))
    assert net.num_edges == 2 and net.num_vertices == 3
    assert len(net.leaf_labels) == 2
    assert len(net.out_edges[net.root]) == 2


def test_keyword_form_matches_params():
    a = random_network(GenParams(5, 3, 9))
    b = random_network(n=5, r=3, seed=9)
    assert write_network(a) == write_network(b)


def test_deterministic_per_seed():
    a = write_network(random_network(GenParams(7, 6, 123)))
    b = write_network(random_network(GenParams(7, 6, 123)))
    c = write_network(random_network(GenParams(7, 6, 124)))
    assert a == b
    assert a != c


@pytest.mark.parametrize("n, r", [(0, 0), (1, 1), (-2, 0), (3, -1)])
def test_infeasible(n, r):
    with pytest.raises(InfeasibleParams):
        random_network(GenParams(n, r, 0))


@given(st.integers(2, 12), st.integers(0, 15), st.integers(0, 10**6))
def test_shape(n, r, seed):
    net = random_network(GenParams(n, r, seed))
    assert len(net.leaf_labels) == n
    assert len(net.reticulations) == r
    assert tier(net) == r
    assert not net.almost_binary


def test_edge_count_formula():
    for n, r in [(2, 0), (5, 0), (4, 3), (10, 18)]:
        net = random_network(GenParams(n, r, 1))
        assert net.num_edges == 2 * (n - 1) + 3 * r
