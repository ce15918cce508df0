"""Interlacing checks: eigenvalues against degrees, graph against complement.

Every check materializes its inequality chain as a list of links
``lhs <= rhs`` with ``slack = rhs - lhs``; a report passes when the smallest
slack stays above ``-tol``.  All inequalities are non-strict in exact
arithmetic, so only solver rounding can push a slack negative -- the default
tolerance is one order looser than the spectrum merge tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import ThresholdGraph, block_degrees, complement, normalize
from .spectra import condensed_spectrum, full_spectrum, q_spectrum

CHECK_TOL = 1e-7


@dataclass(frozen=True)
class ChainLink:
    """One inequality ``lhs_value <= rhs_value`` with labelled sides."""

    lhs: str
    lhs_value: float
    rhs: str
    rhs_value: float

    @property
    def slack(self) -> float:
        return self.rhs_value - self.lhs_value


@dataclass(frozen=True)
class InterlacingReport:
    """Outcome of one chain check; an empty chain passes vacuously."""

    theorem: str
    chain: tuple[ChainLink, ...]
    tol: float

    @property
    def min_slack(self) -> float:
        if not self.chain:
            return math.inf
        return min(link.slack for link in self.chain)

    @property
    def passed(self) -> bool:
        return self.min_slack >= -self.tol

    def to_json_dict(self) -> dict:
        ms = self.min_slack
        return {
            "theorem": self.theorem,
            "pass": self.passed,
            "min_slack": None if math.isinf(ms) else ms,
            "chain": [
                {
                    "lhs": link.lhs,
                    "lhs_value": link.lhs_value,
                    "rhs": link.rhs,
                    "rhs_value": link.rhs_value,
                    "slack": link.slack,
                }
                for link in self.chain
            ],
        }


def _link(lhs: str, lv: float, rhs: str, rv: float) -> ChainLink:
    return ChainLink(lhs, float(lv), rhs, float(rv))


def check_condensed_interlacing(
    g: ThresholdGraph, tol: float = CHECK_TOL
) -> InterlacingReport:
    """Condensed eigenvalues interleaved with the block degrees (check T8).

    With z zero blocks, the lower chain alternates the z smallest condensed
    eigenvalues with the zero-block degrees in increasing order; the upper
    chain alternates the remaining eigenvalues with the one-block degrees
    minus one.  Either chain may be empty (complete / empty graph).
    """
    if g.n < 2:
        return InterlacingReport("T8", (), tol)
    p = block_degrees(g).block_degrees
    gamma = condensed_spectrum(g).values
    b1 = g.blocks[0][0]
    br = g.blocks[-1][0]
    zero_ks = [k for k, (b, _) in enumerate(g.blocks, 1) if b == 0]
    one_ks = [k for k, (b, _) in enumerate(g.blocks, 1) if b == 1]
    z = len(zero_ks)
    # index bookkeeping sanity: under alternation the eigenvalue split point
    # equals the number of zero blocks
    assert 2 * z == g.r - br - b1 + 1

    links = []
    if z:
        links.append(_link("0", 0.0, "lambda_1(C)", gamma[0]))
        for i, k in enumerate(reversed(zero_ks), start=1):
            links.append(_link(f"lambda_{i}(C)", gamma[i - 1], f"p_{k}", p[k - 1]))
            if i < z:
                links.append(_link(f"p_{k}", p[k - 1], f"lambda_{i + 1}(C)", gamma[i]))
    w = len(one_ks)
    for j, k in enumerate(one_ks, start=1):
        links.append(
            _link(f"p_{k}-1", p[k - 1] - 1, f"lambda_{z + j}(C)", gamma[z + j - 1])
        )
        if j < w:
            nk = one_ks[j]
            links.append(
                _link(
                    f"lambda_{z + j}(C)",
                    gamma[z + j - 1],
                    f"p_{nk}-1",
                    p[nk - 1] - 1,
                )
            )
    return InterlacingReport("T8", tuple(links), tol)


def check_degree_interlacing(
    g: ThresholdGraph, tol: float = CHECK_TOL
) -> InterlacingReport:
    """Full-spectrum eigenvalues against the sorted degrees (check T9).

    Above index n - kbar each eigenvalue is wedged between consecutive
    degrees minus one; below it plain degrees bound the eigenvalues.  When
    the first block is ones and kbar exceeds its length, the sharpened bound
    lambda_i >= d_i at i = n - kbar + q_1 is appended.
    """
    if g.n < 2:
        return InterlacingReport("T9", (), tol)
    d = block_degrees(g).degree_sequence
    lam = full_spectrum(g).values
    n, kbar = g.n, g.kbar

    links = []
    for i in range(n, n - kbar, -1):
        links.append(_link(f"d_{i}-1", d[i - 1] - 1, f"lambda_{i}", lam[i - 1]))
        if i >= 2:
            links.append(_link(f"lambda_{i - 1}", lam[i - 2], f"d_{i}-1", d[i - 1] - 1))
    if 1 <= kbar <= n - 1:
        links.append(
            _link(
                f"d_{n - kbar}",
                d[n - kbar - 1],
                f"d_{n + 1 - kbar}-1",
                d[n - kbar] - 1,
            )
        )
    if kbar == n:
        links.append(_link("0", 0.0, "d_1-1", d[0] - 1))
    else:
        for i in range(n - kbar, 1, -1):
            links.append(_link(f"lambda_{i}", lam[i - 1], f"d_{i}", d[i - 1]))
            links.append(_link(f"d_{i - 1}", d[i - 2], f"lambda_{i}", lam[i - 1]))
        links.append(_link("lambda_1", lam[0], "d_1", d[0]))
        links.append(_link("0", 0.0, "lambda_1", lam[0]))

    b1, q1 = g.blocks[0]
    if b1 == 1 and kbar > q1:
        idx = n - kbar + q1
        links.append(_link(f"d_{idx}", d[idx - 1], f"lambda_{idx}", lam[idx - 1]))
    return InterlacingReport("T9", tuple(links), tol)


def _complement_chain(
    theorem: str,
    lam: tuple[float, ...],
    lam_bar: tuple[float, ...],
    n: int,
    src: str,
    src_bar: str,
    tol: float,
) -> InterlacingReport:
    """Chain ``max(n-2-lam_m(bar),0) <= lam_1 <= n-2-lam_{m-1}(bar) <= ...``"""
    m = len(lam)
    c = float(n - 2)
    links = [
        _link(
            f"max(n-2-lambda_{m}({src_bar}),0)",
            max(c - lam_bar[m - 1], 0.0),
            f"lambda_1({src})",
            lam[0],
        )
    ]
    if m == 1:
        links.append(
            _link(
                f"n-2-lambda_1({src_bar})",
                c - lam_bar[0],
                f"min(n-2,lambda_1({src}))",
                min(c, lam[0]),
            )
        )
        return InterlacingReport(theorem, tuple(links), tol)
    for i in range(1, m):
        mid_label = f"n-2-lambda_{m - i}({src_bar})"
        mid = c - lam_bar[m - i - 1]
        links.append(_link(f"lambda_{i}({src})", lam[i - 1], mid_label, mid))
        if i < m - 1:
            links.append(_link(mid_label, mid, f"lambda_{i + 1}({src})", lam[i]))
        else:
            links.append(
                _link(mid_label, mid, f"min(n-2,lambda_{m}({src}))", min(c, lam[m - 1]))
            )
    return InterlacingReport(theorem, tuple(links), tol)


def check_complement_interlacing(
    g: ThresholdGraph, tol: float = CHECK_TOL
) -> tuple[InterlacingReport, InterlacingReport]:
    """Eigenvalues of the graph against its complement (checks L5 and L7).

    Returns two reports: the dense n x n chain and the condensed r x r one.
    Both use the same reflection around n - 2 with clamped endpoints.
    """
    if g.n < 2:
        return (
            InterlacingReport("L5", (), tol),
            InterlacingReport("L7", (), tol),
        )
    gc = complement(g)
    l5 = _complement_chain(
        "L5", q_spectrum(g).values, q_spectrum(gc).values, g.n, "Q", "Qbar", tol
    )
    l7 = _complement_chain(
        "L7",
        condensed_spectrum(g).values,
        condensed_spectrum(gc).values,
        g.n,
        "C",
        "Cbar",
        tol,
    )
    return l5, l7


def check_append_one(g: ThresholdGraph, tol: float = CHECK_TOL) -> InterlacingReport:
    """Spectrum growth when one dominating vertex is appended (check T11).

    Each old eigenvalue plus one separates consecutive new eigenvalues, and
    the new top eigenvalue clears both n + 1 and the old top plus two.
    """
    if g.n < 2:
        return InterlacingReport("T11", (), tol)
    n = g.n
    grown = normalize(g.bits() + (1,))
    lam = full_spectrum(g).values
    lam2 = full_spectrum(grown).values

    links = [_link("0", 0.0, "lambda'_1", lam2[0])]
    for i in range(1, n + 1):
        links.append(_link(f"lambda'_{i}", lam2[i - 1], f"lambda_{i}+1", lam[i - 1] + 1.0))
        links.append(_link(f"lambda_{i}+1", lam[i - 1] + 1.0, f"lambda'_{i + 1}", lam2[i]))
    links.append(
        _link(
            "max(n+1,lambda_n+2)",
            max(n + 1.0, lam[n - 1] + 2.0),
            f"lambda'_{n + 1}",
            lam2[n],
        )
    )
    return InterlacingReport("T11", tuple(links), tol)
