"""Threshold graphs encoded as alternating run-length creation sequences.

A graph on n vertices is built by inserting one vertex per bit of a binary
sequence: a 0-bit adds an isolated vertex, a 1-bit adds a vertex adjacent to
all vertices inserted before it.  The normalized form stores the sequence as
alternating (bit, run-length) blocks whose first run has length >= 2 when
n >= 2 (the first bit never affects the graph, so it is forced equal to the
second).  Vertex and block indices are 1-based throughout the public API.
"""

from __future__ import annotations

import re
from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import groupby
from typing import Iterable, Iterator

FERRERS_GLYPH = "#"

_RUN_TOKEN = re.compile(r"([01])(?:\^([0-9]+))?")


class SequenceError(ValueError):
    """Rejected creation-sequence text; ``position`` is the 1-based offset."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class ThresholdGraph:
    """Normalized creation sequence stored as ``((bit, run_length), ...)``."""

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", tuple((int(b), int(q)) for b, q in self.blocks)
        )
        if not self.blocks:
            raise ValueError("a threshold graph needs at least one block")
        for b, q in self.blocks:
            if b not in (0, 1):
                raise ValueError(f"block bit must be 0 or 1, got {b!r}")
            if q < 1:
                raise ValueError(f"block length must be positive, got {q!r}")
        for (b, _), (b2, _) in zip(self.blocks, self.blocks[1:]):
            if b + b2 != 1:
                raise ValueError("consecutive blocks must alternate bits")
        if self.n >= 2 and self.blocks[0][1] < 2:
            raise ValueError("the first run must have length >= 2 when n >= 2")

    @property
    def n(self) -> int:
        """Number of vertices."""
        return sum(q for _, q in self.blocks)

    @property
    def r(self) -> int:
        """Number of blocks."""
        return len(self.blocks)

    @property
    def kbar(self) -> int:
        """Number of ones in the creation sequence (dominating insertions)."""
        return sum(b * q for b, q in self.blocks)

    @cached_property
    def prefix_sums(self) -> tuple[int, ...]:
        """Cumulative block sizes ``(0, n_1, ..., n_r)``."""
        sums = [0]
        for _, q in self.blocks:
            sums.append(sums[-1] + q)
        return tuple(sums)

    def bits(self) -> tuple[int, ...]:
        """Expand the blocks back into the normalized bit sequence."""
        return tuple(b for b, q in self.blocks for _ in range(q))

    def sequence_text(self) -> str:
        return "".join(str(b) for b in self.bits())

    def block_of(self, v: int) -> int:
        """Return the 1-based block index containing 1-based vertex ``v``."""
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex index {v} out of range 1..{self.n}")
        return bisect_left(self.prefix_sums, v)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-block degrees plus the expanded, ascending degree sequence."""

    block_degrees: tuple[int, ...]
    degree_sequence: tuple[int, ...]
    edge_count: int


def parse_bits(text: str) -> tuple[int, ...]:
    """Parse a plain '0'/'1' string into a raw bit sequence."""
    if not text:
        raise SequenceError("empty sequence", position=1)
    for pos, ch in enumerate(text, 1):
        if ch not in "01":
            raise SequenceError(
                f"illegal character {ch!r} at position {pos}", position=pos
            )
    return tuple(int(ch) for ch in text)


def _parse_run_length(text: str) -> tuple[int, ...]:
    """Parse comma-separated ``b^q`` tokens, e.g. ``0^2,1^2,0,1``."""
    bits: list[int] = []
    offset = 0
    for token in text.split(","):
        if not token:
            raise SequenceError(
                f"empty run-length token at position {offset + 1}",
                position=offset + 1,
            )
        m = _RUN_TOKEN.fullmatch(token)
        if m is None:
            bad = offset + 1
            if token[0] in "01":
                bad = offset + 2
            raise SequenceError(
                f"malformed run-length token {token!r} at position {bad}",
                position=bad,
            )
        count = int(m.group(2)) if m.group(2) is not None else 1
        if count == 0:
            raise SequenceError(
                f"zero run length at position {offset + 3}", position=offset + 3
            )
        bits.extend([int(m.group(1))] * count)
        offset += len(token) + 1
    return tuple(bits)


def parse_sequence_text(text: str) -> tuple[int, ...]:
    """Accept either the plain bit form or the run-length ``b^q`` form."""
    if "," in text or "^" in text:
        return _parse_run_length(text)
    return parse_bits(text)


def normalize(bits: Iterable[int]) -> ThresholdGraph:
    """Run-length encode a raw bit sequence into its canonical block form.

    The first bit is overwritten with the second before encoding: the first
    insertion is an isolated vertex either way, so this canonicalizes the
    sequence without changing the graph.
    """
    seq = tuple(int(b) for b in bits)
    if not seq:
        raise ValueError("empty bit sequence")
    if any(b not in (0, 1) for b in seq):
        raise ValueError("bits must be 0 or 1")
    if len(seq) >= 2:
        seq = (seq[1],) + seq[1:]
    blocks = tuple((b, len(list(run))) for b, run in groupby(seq))
    return ThresholdGraph(blocks)


def parse(text: str) -> ThresholdGraph:
    """Parse sequence text (either accepted form) and normalize it."""
    return normalize(parse_sequence_text(text))


@lru_cache(maxsize=None)
def block_degrees(g: ThresholdGraph) -> DegreeProfile:
    """Compute per-block degrees, the sorted degree sequence and |E|.

    Vertices of a 0-block k see exactly the dominating vertices inserted at
    or after them; vertices of a 1-block additionally see everything earlier.
    """
    ones_from = [0] * (g.r + 2)
    for k in range(g.r, 0, -1):
        b, q = g.blocks[k - 1]
        ones_from[k] = ones_from[k + 1] + b * q
    degrees = []
    for k, (b, q) in enumerate(g.blocks, 1):
        if b == 0:
            p = ones_from[k]
        else:
            p = g.prefix_sums[k] - 1 + ones_from[k + 1]
        degrees.append(p)
    expanded = sorted(
        p for p, (_, q) in zip(degrees, g.blocks) for _ in range(q)
    )
    total = sum(expanded)
    assert total % 2 == 0, "degree sum must be even"
    return DegreeProfile(tuple(degrees), tuple(expanded), total // 2)


def is_edge(g: ThresholdGraph, i: int, j: int) -> bool:
    """Whether 1-based vertices ``i`` and ``j`` are adjacent.

    The pair is unordered; the later vertex decides: the edge exists exactly
    when the later vertex belongs to a 1-block.
    """
    if i == j:
        raise ValueError(f"vertex pair must be distinct, got ({i}, {j})")
    lo, hi = (i, j) if i < j else (j, i)
    if lo < 1 or hi > g.n:
        raise ValueError(f"vertex pair ({i}, {j}) out of range 1..{g.n}")
    return g.blocks[g.block_of(hi) - 1][0] == 1


def complement(g: ThresholdGraph) -> ThresholdGraph:
    """Flip every bit of the creation sequence blockwise."""
    return ThresholdGraph(tuple((1 - b, q) for b, q in g.blocks))


def graph_from_counter(n: int, counter: int) -> ThresholdGraph:
    """Build the ``counter``-th graph on ``n`` vertices.

    Bits 2..n are the big-endian binary digits of ``counter`` (bit 2 is the
    most significant); bit 1 is forced equal to bit 2.
    """
    if n < 1:
        raise ValueError("vertex count must be >= 1")
    if n == 1:
        if counter != 0:
            raise ValueError("only counter 0 exists for n = 1")
        return normalize((0,))
    span = 1 << (n - 1)
    if not 0 <= counter < span:
        raise ValueError(f"counter {counter} out of range 0..{span - 1}")
    tail = tuple((counter >> (n - 1 - i)) & 1 for i in range(1, n))
    return normalize((tail[0],) + tail)


def enumerate_graphs(
    n: int, start: int = 0, stop: int | None = None
) -> Iterator[ThresholdGraph]:
    """Yield every threshold graph on ``n`` vertices exactly once.

    For n >= 2 that is 2^(n-1) graphs in deterministic counter order; the
    optional ``start``/``stop`` counter range supports partitioned sweeps.
    """
    if n < 1:
        raise ValueError("vertex count must be >= 1")
    total = 1 if n == 1 else 1 << (n - 1)
    if stop is None:
        stop = total
    for counter in range(max(start, 0), min(stop, total)):
        yield graph_from_counter(n, counter)


def ferrers(g: ThresholdGraph) -> str:
    """Render the degree sequence as a Ferrers diagram, one row per vertex.

    Rows are sorted by descending degree and carry a fixed-width gutter with
    the 1-based index of the block the row's vertex belongs to.  One
    ``FERRERS_GLYPH`` is printed per unit of degree.
    """
    profile = block_degrees(g)
    order = sorted(range(g.r), key=lambda k: -profile.block_degrees[k])
    width = len(f"b{g.r}")
    lines = []
    for k in order:
        label = f"b{k + 1}"
        row = f"{label:<{width}} | " + FERRERS_GLYPH * profile.block_degrees[k]
        lines.extend([row.rstrip()] * g.blocks[k][1])
    return "\n".join(lines)
