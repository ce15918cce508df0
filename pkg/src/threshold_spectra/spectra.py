"""Signless Laplacian matrices of threshold graphs and their spectra.

Two routes to the spectrum coexist on purpose.  Repeated degrees give n - r
eigenvalues in closed form (one eigenvalue per block with multiplicity
run_length - 1, carried by sparse difference vectors); the remaining r come
from a condensed r x r matrix over the blocks.  Merging both must agree with
a dense solve of the full n x n matrix, which is what the test suite checks
exhaustively at small n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import ThresholdGraph, block_degrees
from .solver import DEFAULT_TOL, MAX_SWEEPS, jacobi_eigenvalues


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with a provenance tag per value.

    Tags are ``"direct:<block>"`` for closed-form values, ``"condensed"`` for
    values of the condensed matrix, and ``"dense"`` for a plain dense solve.
    """

    values: tuple[float, ...]
    provenance: tuple[str, ...]
    tolerance: float

    @property
    def n(self) -> int:
        return len(self.values)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "values": list(self.values),
            "provenance": list(self.provenance),
        }


@dataclass(frozen=True)
class BlockEigenpairs:
    """Closed-form eigenpairs contributed by one block of repeated degree.

    ``vectors`` holds ``multiplicity`` sparse eigenvectors as tuples of
    ``(vertex, coefficient)`` with 1-based vertex indices: the j-th vector has
    j leading entries 1/j followed by a single -1.
    """

    block: int
    eigenvalue: int
    multiplicity: int
    vectors: tuple[tuple[tuple[int, float], ...], ...]


def assemble_q(g: ThresholdGraph) -> np.ndarray:
    """Dense signless Laplacian: vertex degrees on the diagonal, 0/1 off it."""
    n = g.n
    a = np.zeros((n, n), dtype=np.float64)
    bits = g.bits()
    for j in range(n):
        if bits[j]:
            a[:j, j] = 1.0
            a[j, :j] = 1.0
    profile = block_degrees(g)
    by_vertex = np.repeat(
        np.asarray(profile.block_degrees, dtype=np.float64),
        [q for _, q in g.blocks],
    )
    np.fill_diagonal(a, by_vertex)
    return a


def assemble_condensed(g: ThresholdGraph) -> np.ndarray:
    """Condensed r x r matrix over blocks.

    Diagonal entry k is p_k + b_k (q_k - 1); the off-diagonal entry for
    blocks i < j is b_j sqrt(q_i q_j) -- the bit of the later block decides,
    exactly as for single edges.  Each square root is taken once on the
    integer product so rounding stays confined to that one operation.
    """
    r = g.r
    p = block_degrees(g).block_degrees
    c = np.zeros((r, r), dtype=np.float64)
    for k, (b, q) in enumerate(g.blocks):
        c[k, k] = p[k] + b * (q - 1)
    for i in range(r):
        qi = g.blocks[i][1]
        for j in range(i + 1, r):
            bj, qj = g.blocks[j]
            if bj:
                c[i, j] = c[j, i] = math.sqrt(qi * qj)
    return c


def condensed_complement(c: np.ndarray, q: tuple[int, ...]) -> np.ndarray:
    """Condensed matrix of the complement graph from the original's.

    Returns ``(n - 2) I + qhat qhat^T - c`` where ``qhat`` is the vector of
    square roots of the block sizes and n is the vertex count.
    """
    c = np.asarray(c, dtype=np.float64)
    r = len(q)
    if c.shape != (r, r):
        raise ValueError(
            f"block sizes ({r}) do not match matrix order {c.shape}"
        )
    n = sum(q)
    qhat = np.sqrt(np.asarray(q, dtype=np.float64))
    return (n - 2.0) * np.eye(r) + np.outer(qhat, qhat) - c


def direct_eigenpairs(g: ThresholdGraph) -> tuple[BlockEigenpairs, ...]:
    """Closed-form eigenvalue p_k - b_k of multiplicity q_k - 1 per block."""
    out = []
    p = block_degrees(g).block_degrees
    for k, (b, q) in enumerate(g.blocks, 1):
        if q < 2:
            continue
        base = g.prefix_sums[k - 1]
        vectors = []
        for j in range(1, q):
            entries = [(base + t, 1.0 / j) for t in range(1, j + 1)]
            entries.append((base + j + 1, -1.0))
            vectors.append(tuple(entries))
        out.append(
            BlockEigenpairs(
                block=k,
                eigenvalue=p[k - 1] - b,
                multiplicity=q - 1,
                vectors=tuple(vectors),
            )
        )
    return tuple(out)


def eigensolve(
    m: np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS
) -> Spectrum:
    """Dense symmetric solve via cyclic Jacobi; values tagged ``dense``."""
    values = jacobi_eigenvalues(m, tol=tol, max_sweeps=max_sweeps)
    vals = tuple(float(v) for v in values)
    return Spectrum(vals, ("dense",) * len(vals), tol)


@lru_cache(maxsize=None)
def condensed_spectrum(g: ThresholdGraph, tol: float = DEFAULT_TOL) -> Spectrum:
    return eigensolve(assemble_condensed(g), tol=tol)


@lru_cache(maxsize=None)
def q_spectrum(g: ThresholdGraph, tol: float = DEFAULT_TOL) -> Spectrum:
    return eigensolve(assemble_q(g), tol=tol)


@lru_cache(maxsize=None)
def full_spectrum(g: ThresholdGraph, tol: float = DEFAULT_TOL) -> Spectrum:
    """Merge the closed-form block eigenvalues with the condensed spectrum.

    The merge is a plain multiset union sorted ascending: coincident values
    stay as distinct elements and are never deduplicated.
    """
    entries: list[tuple[float, str]] = []
    for pair in direct_eigenpairs(g):
        entries.extend(
            (float(pair.eigenvalue), f"direct:{pair.block}")
            for _ in range(pair.multiplicity)
        )
    entries.extend((v, "condensed") for v in condensed_spectrum(g, tol).values)
    entries.sort(key=lambda e: (e[0], e[1]))
    assert len(entries) == g.n
    return Spectrum(
        tuple(e[0] for e in entries), tuple(e[1] for e in entries), tol
    )
