"""Counting and listing support networks trail by trail.

Every family is a direct product over the maximal zig-zag trails of per-trail
option sets of 0/1 strings (bit ``i`` says whether ``trail.edges[i]`` is
kept):

* ``ALL``: fences keep both ends, no two consecutive dropped edges (crowns:
  cyclically). Counted by Fibonacci (fence) and Lucas (crown) numbers.
* ``MINIMAL``: additionally no three consecutive kept edges. Padovan / Perrin.
* ``MINIMUM``: the ``ALL`` options of least weight.
* ``TREES``: support trees, i.e. head siblings kept exactly once; empty on
  W-fences.
"""

from __future__ import annotations

import enum
import functools
import math
from typing import Iterator, Sequence

from .network import EdgeSelection, NetworkError, PhyloNetwork
from .zigzag import Trail, TrailDecomposition, TrailType, decompose


class Family(str, enum.Enum):
    TREES = "trees"
    ALL = "all"
    MINIMAL = "minimal"
    MINIMUM = "minimum"


class SequenceKind(str, enum.Enum):
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"
    PADOVAN = "padovan"
    PERRIN = "perrin"


class ZeroIndexError(NetworkError, ValueError):
    pass


class LengthMismatchError(NetworkError, ValueError):
    pass


class EmptyFamilyError(NetworkError, ValueError):
    pass


_SEEDS = {
    SequenceKind.FIBONACCI: (1, 1),
    SequenceKind.LUCAS: (1, 3),
    SequenceKind.PADOVAN: (1, 1, 1),
    SequenceKind.PERRIN: (0, 2, 3),
}


def sequence_table(kind: SequenceKind, n: int) -> list[int]:
    """Terms ``1..n`` of the sequence; ``table[i]`` is term ``i`` (``table[0]`` unused)."""
    kind = SequenceKind(kind)
    seeds = _SEEDS[kind]
    table = [0] + list(seeds[:n])
    # Fibonacci/Lucas: a_n = a_{n-1} + a_{n-2}; Padovan/Perrin: a_n = a_{n-2} + a_{n-3}
    lag = 1 if len(seeds) == 2 else 2
    for i in range(len(seeds) + 1, n + 1):
        table.append(table[i - lag] + table[i - lag - 1])
    return table


def sequence_value(kind: SequenceKind, n: int) -> int:
    if n < 1:
        raise ZeroIndexError(f"sequences are indexed from 1, got {n}")
    return sequence_table(kind, n)[n]


def min_weight(trail: Trail) -> int:
    """Fewest kept edges of any ``ALL`` option on this trail."""
    m = trail.size
    if trail.kind is TrailType.CROWN:
        return m // 2
    if trail.kind is TrailType.NFENCE:
        return (m + 1) // 2
    return m // 2 + 1


def _has_factor(bits: Sequence[int], pattern: tuple[int, ...], cyclic: bool) -> bool:
    m, k = len(bits), len(pattern)
    last = m if cyclic else m - k + 1
    for i in range(max(last, 0)):
        if all(bits[(i + j) % m] == pattern[j] for j in range(k)):
            return True
    return False


def is_admissible(trail: Trail, bits: Sequence[int] | str, family: Family) -> bool:
    """Whether ``bits`` (one entry per trail edge) is an option of ``family``."""
    family = Family(family)
    if isinstance(bits, str):
        bits = [int(c) for c in bits]
    bits = list(bits)
    if len(bits) != trail.size:
        raise LengthMismatchError(f"trail has {trail.size} edges, got {len(bits)} bits")
    cyclic = trail.kind is TrailType.CROWN
    if not cyclic and (bits[0] != 1 or bits[-1] != 1):
        return False
    if family is Family.TREES:
        # kept once at every head link, at least once at every tail link
        links = len(bits) if cyclic else len(bits) - 1
        for i in range(links):
            a, b = bits[i], bits[(i + 1) % len(bits)]
            if trail.link_is_tail(i):
                if a + b == 0:
                    return False
            elif a + b != 1:
                return False
        return True
    if _has_factor(bits, (0, 0), cyclic):
        return False
    if family is Family.ALL:
        return True
    if family is Family.MINIMAL:
        return not _has_factor(bits, (1, 1, 1), cyclic)
    return sum(bits) == min_weight(trail)


def trail_option_count(trail: Trail, family: Family, _tables: dict | None = None) -> int:
    family = Family(family)
    m = trail.size
    crown = trail.kind is TrailType.CROWN
    if family is Family.ALL or family is Family.MINIMAL:
        if family is Family.ALL:
            kind = SequenceKind.LUCAS if crown else SequenceKind.FIBONACCI
        else:
            kind = SequenceKind.PERRIN if crown else SequenceKind.PADOVAN
        if _tables is not None:
            return _tables[kind][m]
        return sequence_value(kind, m)
    if crown:
        return 2
    if trail.kind is TrailType.NFENCE:
        return 1
    if trail.kind is TrailType.WFENCE and family is Family.TREES:
        return 0
    return m // 2


def _as_decomposition(obj: PhyloNetwork | TrailDecomposition) -> TrailDecomposition:
    return obj if isinstance(obj, TrailDecomposition) else decompose(obj)


def count_family(network: PhyloNetwork | TrailDecomposition, family: Family) -> int:
    """Exact size of a family: the product of per-trail option counts."""
    family = Family(family)
    dec = _as_decomposition(network)
    tables = None
    if family in (Family.ALL, Family.MINIMAL):
        longest = max((t.size for t in dec.trails), default=1)
        if family is Family.ALL:
            kinds = (SequenceKind.FIBONACCI, SequenceKind.LUCAS)
        else:
            kinds = (SequenceKind.PADOVAN, SequenceKind.PERRIN)
        tables = {k: sequence_table(k, longest) for k in kinds}
    factors = [trail_option_count(t, family, tables) for t in dec.trails]
    return _product(factors)


def _product(values: list[int]) -> int:
    # pairwise products keep big-int multiplications balanced
    if not values:
        return 1
    while len(values) > 1:
        nxt = [values[i] * values[i + 1] for i in range(0, len(values) - 1, 2)]
        if len(values) % 2:
            nxt.append(values[-1])
        values = nxt
    return values[0]


def is_tree_based(network: PhyloNetwork | TrailDecomposition) -> bool:
    return _as_decomposition(network).count(TrailType.WFENCE) == 0


# --- per-trail listing -----------------------------------------------------


def _window_rules(family: Family) -> tuple[tuple[int, ...], ...]:
    if family is Family.ALL:
        return ((0, 0),)
    return ((0, 0), (1, 1, 1))


def _rule_helpers(m: int, forbidden: tuple[tuple[int, ...], ...], cyclic: bool):
    def fixed_ok(pos: int, b: int) -> bool:
        return cyclic or b == 1 or (pos != 0 and pos != m - 1)

    def window_ok(last: tuple[int, ...], b: int) -> bool:
        seq = last + (b,)
        for pat in forbidden:
            k = len(pat)
            if len(seq) >= k and seq[-k:] == pat:
                return False
        return True

    def wrap_ok(first: tuple[int, ...], last: tuple[int, ...]) -> bool:
        if not cyclic:
            return True
        seq = last + first
        for pat in forbidden:
            k = len(pat)
            # windows that straddle the end of the string
            for i in range(len(last) - k + 1, len(last)):
                if 0 <= i and i + k <= len(seq) and seq[i : i + k] == pat:
                    return False
        return True

    def step(first: tuple[int, ...], last: tuple[int, ...], b: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        if len(first) < 2:
            first = first + (b,)
        return first, (last + (b,))[-2:]

    return fixed_ok, window_ok, wrap_ok, step


@functools.lru_cache(maxsize=4096)
def _feasibility(m: int, forbidden: tuple[tuple[int, ...], ...], cyclic: bool) -> tuple[frozenset, ...]:
    """States (first two bits, last two bits) after ``pos`` bits that can
    still be completed; shared by every trail of the same size and shape."""
    fixed_ok, window_ok, wrap_ok, step = _rule_helpers(m, forbidden, cyclic)
    # feasible[pos] holds the states at ``pos`` bits placed that can be completed
    feasible: list[set] = [set() for _ in range(m + 1)]
    states_at: list[set] = [set() for _ in range(m + 1)]
    states_at[0].add(((), ()))
    for pos in range(m):
        for first, last in states_at[pos]:
            for b in (1, 0):
                if fixed_ok(pos, b) and window_ok(last, b):
                    states_at[pos + 1].add(step(first, last, b))
    for st in states_at[m]:
        if wrap_ok(*st):
            feasible[m].add(st)
    for pos in range(m - 1, -1, -1):
        for first, last in states_at[pos]:
            for b in (1, 0):
                if fixed_ok(pos, b) and window_ok(last, b) and step(first, last, b) in feasible[pos + 1]:
                    feasible[pos].add((first, last))
                    break
    return tuple(frozenset(f) for f in feasible)


def _options_by_search(m: int, forbidden: tuple[tuple[int, ...], ...], cyclic: bool) -> Iterator[tuple[int, ...]]:
    """All 0/1 strings of length ``m`` avoiding ``forbidden`` factors.

    Fences (``cyclic=False``) must start and end with 1. Strings come in
    lexicographic order with 1 before 0. A backward feasibility table over
    (first two bits, last two bits) states lets the depth-first search skip
    dead branches, so consecutive outputs are O(m) apart.
    """
    fixed_ok, window_ok, _, step = _rule_helpers(m, forbidden, cyclic)
    feasible = _feasibility(m, forbidden, cyclic)
    if ((), ()) not in feasible[0]:
        return

    bits = [0] * m
    states = [((), ())] * (m + 1)
    # choice[pos] is the next candidate bit index into (1, 0) to try at pos
    choice = [0] * (m + 1)
    pos = 0
    while True:
        if pos == m:
            yield tuple(bits)
            pos -= 1
            while pos >= 0 and choice[pos] >= 2:
                pos -= 1
            if pos < 0:
                return
            continue
        first, last = states[pos]
        placed = False
        while choice[pos] < 2:
            b = (1, 0)[choice[pos]]
            choice[pos] += 1
            if fixed_ok(pos, b) and window_ok(last, b):
                nxt = step(first, last, b)
                if nxt in feasible[pos + 1]:
                    bits[pos] = b
                    states[pos + 1] = nxt
                    choice[pos + 1] = 0
                    pos += 1
                    placed = True
                    break
        if not placed:
            pos -= 1
            while pos >= 0 and choice[pos] >= 2:
                pos -= 1
            if pos < 0:
                return


def _least_weight_options(trail: Trail) -> Iterator[tuple[int, ...]]:
    m = trail.size
    if trail.kind is TrailType.CROWN:
        yield (1, 0) * (m // 2)
        yield (0, 1) * (m // 2)
    elif trail.kind is TrailType.NFENCE:
        yield (1,) + (0, 1) * ((m - 1) // 2)
    else:
        k = (m - 2) // 2
        # 1 (01)^p (10)^q 1 with p + q = k; p ascending is 1-before-0 order
        for p in range(k + 1):
            yield (1,) + (0, 1) * p + (1, 0) * (k - p) + (1,)


def trail_options(trail: Trail, family: Family) -> Iterator[tuple[int, ...]]:
    """Lazily yield every option of ``family`` on ``trail``, 1-before-0 lexicographic."""
    family = Family(family)
    if family is Family.TREES:
        if trail.kind is TrailType.WFENCE:
            return iter(())
        return _least_weight_options(trail)
    if family is Family.MINIMUM:
        return _least_weight_options(trail)
    return _options_by_search(trail.size, _window_rules(family), trail.kind is TrailType.CROWN)


class TrailOptionCursor:
    """Resettable cursor over one trail's options."""

    def __init__(self, trail: Trail, family: Family):
        self.trail = trail
        self.family = Family(family)
        self.current: tuple[int, ...] | None = None
        self.exhausted = False
        self.reset()

    def reset(self) -> tuple[int, ...] | None:
        """Rewind to the first option and return it (``None`` for an empty family)."""
        self._it = trail_options(self.trail, self.family)
        self.exhausted = False
        return self.advance()

    def advance(self) -> tuple[int, ...] | None:
        nxt = next(self._it, None)
        if nxt is None:
            self.exhausted = True
        else:
            self.current = nxt
        return nxt

    def __iter__(self):
        while not self.exhausted and self.current is not None:
            yield self.current
            self.advance()


def enumerate_trail_options(trail: Trail, family: Family) -> TrailOptionCursor:
    cursor = TrailOptionCursor(trail, family)
    if cursor.current is None:
        raise EmptyFamilyError(f"{family.value} has no option on a {trail.kind.value}")
    return cursor


def enumerate_family(
    network: PhyloNetwork | TrailDecomposition,
    family: Family,
    limit: int | None = None,
) -> Iterator[EdgeSelection]:
    """Stream the selections of ``family`` as a product odometer over trails.

    The last trail turns fastest; an exhausted cursor is rewound and carries
    into the trail before it.
    """
    family = Family(family)
    dec = _as_decomposition(network)
    net = dec.network
    cursors = [enumerate_trail_options(t, family) for t in dec.trails]
    flags = bytearray(b"0" * net.num_edges)

    def place(cursor: TrailOptionCursor) -> None:
        for e, b in zip(cursor.trail.edges, cursor.current):
            flags[e] = 49 if b else 48

    for c in cursors:
        place(c)
    # single-option trails never move; leave them out of the odometer
    cursors = [c for c in cursors if trail_option_count(c.trail, family) > 1]
    emitted = 0
    while limit is None or emitted < limit:
        yield EdgeSelection.from_flags(net, flags)
        emitted += 1
        i = len(cursors) - 1
        while i >= 0:
            if cursors[i].advance() is not None:
                place(cursors[i])
                break
            cursors[i].reset()
            place(cursors[i])
            i -= 1
        if i < 0:
            return


def selection_trail_bits(dec: TrailDecomposition, selection: EdgeSelection) -> list[tuple[int, ...]]:
    """Restrict a selection to each trail, as bit tuples in trail order."""
    return [tuple(1 if e in selection else 0 for e in t.edges) for t in dec.trails]
