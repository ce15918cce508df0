"""Exhaustive verification sweeps over enumerated threshold graphs.

The enumeration counter space is cut into fixed-size chunks; chunks can run
in worker processes and their partial summaries merge in enumeration order,
so serial and parallel runs produce identical summaries.
"""

from __future__ import annotations

import math
import multiprocessing

from .brouwer import check_brouwer
from .graphs import ThresholdGraph, block_degrees, graph_from_counter
from .interlace import (
    CHECK_TOL,
    check_append_one,
    check_complement_interlacing,
    check_condensed_interlacing,
    check_degree_interlacing,
)

CHECKS = ("t8", "t9", "l5", "l7", "t11", "brouwer", "lemmas")
DEFAULT_MAX_N_CAP = 16
_CHUNK = 256


def check_graph(
    g: ThresholdGraph, checks: tuple[str, ...], tol: float
) -> dict[str, tuple[float | None, bool]]:
    """Run the selected checks; per check return (min slack or None, ok)."""
    out: dict[str, tuple[float | None, bool]] = {}

    def _take(name, report):
        ms = report.min_slack
        out[name] = (None if math.isinf(ms) else ms, report.passed)

    if "t8" in checks:
        _take("t8", check_condensed_interlacing(g, tol))
    if "t9" in checks:
        _take("t9", check_degree_interlacing(g, tol))
    if "l5" in checks or "l7" in checks:
        l5, l7 = check_complement_interlacing(g, tol)
        if "l5" in checks:
            _take("l5", l5)
        if "l7" in checks:
            _take("l7", l7)
    if "t11" in checks:
        _take("t11", check_append_one(g, tol))
    if "brouwer" in checks or "lemmas" in checks:
        rep = check_brouwer(g, tol)
        if "brouwer" in checks:
            out["brouwer"] = (rep.min_slack, rep.min_slack >= -tol)
        if "lemmas" in checks:
            l15 = rep.lemma15_slacks
            ok = rep.lemma14 != "fail" and all(s >= 0 for s in l15)
            out["lemmas"] = (float(min(l15)) if l15 else None, ok)
    return out


def sweep_chunk(
    n: int,
    start: int,
    stop: int,
    checks: tuple[str, ...],
    tol: float,
    collect_rows: bool,
) -> dict:
    """Check counters ``start..stop-1`` on ``n`` vertices; partial summary."""
    minima: dict[str, float | None] = {c: None for c in checks}
    first_failure = None
    rows = []
    count = 0
    for counter in range(start, stop):
        g = graph_from_counter(n, counter)
        results = check_graph(g, checks, tol)
        count += 1
        graph_min = None
        for check in checks:
            slack, ok = results[check]
            if slack is not None:
                if minima[check] is None or slack < minima[check]:
                    minima[check] = slack
                if graph_min is None or slack < graph_min:
                    graph_min = slack
            if not ok and first_failure is None:
                first_failure = {
                    "n": n,
                    "counter": counter,
                    "sequence": g.sequence_text(),
                    "check": check,
                }
        if collect_rows:
            profile = block_degrees(g)
            brouwer_rep = check_brouwer(g, tol) if "brouwer" in checks else None
            rows.append(
                {
                    "n": n,
                    "sequence": g.sequence_text(),
                    "kbar": g.kbar,
                    "E": profile.edge_count,
                    "k_min_slack": brouwer_rep.argmin_k if brouwer_rep else None,
                    "min_slack": graph_min,
                    "pass": all(ok for _, ok in results.values()),
                }
            )
    return {
        "n": n,
        "count": count,
        "minima": minima,
        "first_failure": first_failure,
        "rows": rows,
    }


def _worker(args):
    return sweep_chunk(*args)


def run_sweep(
    max_n: int,
    checks: tuple[str, ...] = CHECKS,
    jobs: int = 1,
    tol: float = CHECK_TOL,
    collect_rows: bool = False,
) -> tuple[dict, list[dict]]:
    """Sweep all threshold graphs with 2 <= n <= max_n.

    Returns ``(summary, rows)``; rows are per-graph records in enumeration
    order, only filled when ``collect_rows`` is set.
    """
    if max_n < 2:
        raise ValueError("sweep needs max_n >= 2")
    checks = tuple(c for c in CHECKS if c in checks)
    if not checks:
        raise ValueError("no checks selected")
    tasks = []
    for n in range(2, max_n + 1):
        total = 1 << (n - 1)
        for start in range(0, total, _CHUNK):
            tasks.append((n, start, min(start + _CHUNK, total), checks, tol, collect_rows))

    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            chunk_results = list(pool.imap(_worker, tasks, chunksize=1))
    else:
        chunk_results = [sweep_chunk(*t) for t in tasks]

    per_n: dict[str, int] = {}
    minima: dict[str, float | None] = {c: None for c in checks}
    first_failure = None
    rows: list[dict] = []
    total_graphs = 0
    for res in chunk_results:
        key = str(res["n"])
        per_n[key] = per_n.get(key, 0) + res["count"]
        total_graphs += res["count"]
        for check in checks:
            slack = res["minima"][check]
            if slack is not None and (minima[check] is None or slack < minima[check]):
                minima[check] = slack
        if first_failure is None and res["first_failure"] is not None:
            first_failure = res["first_failure"]
        rows.extend(res["rows"])

    summary = {
        "max_n": max_n,
        "checks": list(checks),
        "tol": tol,
        "graphs": total_graphs,
        "per_n": per_n,
        "min_slack": minima,
        "first_failure": (
            None
            if first_failure is None
            else {k: first_failure[k] for k in ("n", "sequence", "check")}
        ),
        "pass": first_failure is None,
    }
    return summary, rows
