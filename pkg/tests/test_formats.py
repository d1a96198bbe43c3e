import re

import pytest
from hypothesis import given

from conftest import DATA, small_networks
from gadgets import SIGNATURE_TEXT
from supportnet import decompose, min_tier
from supportnet.formats import (
    BadEdgeLine,
    BadHeader,
    DuplicateEdge,
    ValidationFailed,
    export_dot,
    parse_network,
    read_network,
    write_network,
)
from supportnet.network import ViolationKind


def test_missing_header():
    with pytest.raises(BadHeader):
        parse_network("rho -> a\nrho -> b\n")
    with pytest.raises(BadHeader):
        parse_network("")


@pytest.mark.parametrize(
    "body, error, line",
    [
        ("rho -> a\nrho => b\n", BadEdgeLine, 3),
        ("rho -> a\nrho -> b\nrho -> a\n", DuplicateEdge, 4),
        ("rho -> rho\n", BadEdgeLine, 2),
        ("rho -> a\nleaves: a\nrho -> b\n", BadEdgeLine, 4),
        ("rho -> a b\n", BadEdgeLine, 2),
    ],
)
def test_parse_errors_carry_line(body, error, line):
    with pytest.raises(error) as err:
        parse_network("# phylonet v1\n" + body)
    assert err.value.line == line


def test_validation_failure_wraps_report():
    with pytest.raises(ValidationFailed) as err:
        parse_network("# phylonet v1\nrho -> a\nrho -> b\nrho -> c\n")
    assert ViolationKind.BAD_ROOT_DEGREE in err.value.report.kinds


def test_comments_and_blank_lines_ignored():
    net = parse_network("# phylonet v1\n# cherry\n\nrho -> a\n   \nrho -> b\n")
    assert net.num_edges == 2


def test_file_matches_fixture():
    net = read_network(DATA / "signature.phylonet")
    assert write_network(net) == write_network(parse_network(SIGNATURE_TEXT))


@given(small_networks())
def test_round_trip(net):
    text = write_network(net)
    again = parse_network(text)
    assert write_network(again) == text
    assert [t.edges for t in decompose(again).trails] == [t.edges for t in decompose(net).trails]


# A DOT subset sufficient for what export_dot emits.
_ID = r'"(?:[^"\\]|\\.)*"'
_ATTR = rf'\w+=(?:{_ID}|\w+)'
_ATTRS = rf'(?: \[{_ATTR}(?:, {_ATTR})*\])?'
_STMT = re.compile(rf'^  (?:node \[{_ATTR}(?:, {_ATTR})*\]|{_ID}{_ATTRS}|{_ID} -> {_ID}{_ATTRS});$')


def _check_dot(text):
    lines = text.rstrip("\n").split("\n")
    assert lines[0] == "digraph N {" and lines[-1] == "}"
    for line in lines[1:-1]:
        assert _STMT.match(line), line
    return lines


def test_dot_plain(signature_net):
    lines = _check_dot(export_dot(signature_net))
    assert sum(" -> " in l for l in lines) == signature_net.num_edges
    assert sum("shape=box" in l for l in lines) == 3
    assert sum('fillcolor="red"' in l for l in lines) == 4


def test_dot_min_tier_marks_kept_reticulations(signature_net):
    sel, rstar = min_tier(signature_net)
    lines = _check_dot(export_dot(signature_net, sel, decompose(signature_net)))
    assert sum('fillcolor="red"' in l for l in lines) == rstar
    assert sum("style=dashed" in l for l in lines) == signature_net.num_edges - len(sel)
    assert all("color=" in l for l in lines if " -> " in l)


def test_dot_quotes_names():
    net = parse_network("# phylonet v1\nrho -> a.1\nrho -> b-2\n")
    _check_dot(export_dot(net))
