"""Brute-force oracles shared across test modules.

The adjacency oracle replays the creation process directly (a 1-bit vertex
connects to everything inserted before it) and is deliberately independent
of the block-degree formulas and of the edge-rule lookup it is used to
check.
"""

from __future__ import annotations


def creation_adjacency(bits) -> list[set[int]]:
    """Adjacency sets (0-based) built by replaying the creation sequence."""
    n = len(bits)
    adj: list[set[int]] = [set() for _ in range(n)]
    for j in range(n):
        if bits[j]:
            for i in range(j):
                adj[i].add(j)
                adj[j].add(i)
    return adj


def brute_degree_sequence(bits) -> tuple[int, ...]:
    return tuple(sorted(len(a) for a in creation_adjacency(bits)))


def brute_edge_count(bits) -> int:
    return sum(len(a) for a in creation_adjacency(bits)) // 2
