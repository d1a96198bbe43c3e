import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from gadgets import CROWN4_TEXT, SIGNATURE_TEXT  # noqa: E402

from supportnet import GenParams, random_network  # noqa: E402
from supportnet.formats import parse_network  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


@pytest.fixture
def signature_net():
    return parse_network(SIGNATURE_TEXT)


@pytest.fixture
def crown_net():
    return parse_network(CROWN4_TEXT)


@pytest.fixture
def cherry():
    return parse_network("# phylonet v1\nrho -> a\nrho -> b\n")


def small_networks(max_edges=24):
    """Seeded random networks small enough for the brute-force oracle."""

    @st.composite
    def build(draw):
        n = draw(st.integers(2, 6))
        r = draw(st.integers(0, 6))
        seed = draw(st.integers(0, 2**32 - 1))
        net = random_network(GenParams(n, r, seed))
        if net.num_edges > max_edges:
            net = random_network(GenParams(2, min(r, 4), seed))
        return net

    return build()


# acceptance results, printed once at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'} {detail}")
