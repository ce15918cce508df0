"""Pure NumPy Jacobi sweep kernel; mirrors the compiled core's arithmetic."""

from __future__ import annotations

import math

import numpy as np


def _offdiag_norm(work: np.ndarray) -> float:
    # sum only the strict triangle: subtracting the diagonal from the total
    # cancels catastrophically once the off-diagonal part is tiny
    upper = np.triu(work, 1)
    return math.sqrt(2.0 * float(np.sum(upper * upper)))


def jacobi_cycle(work: np.ndarray, target: float, max_sweeps: int):
    """Run cyclic Jacobi sweeps on ``work`` in place.

    Rotations below the per-sweep threshold are skipped during the first
    three sweeps (classic threshold pivoting); afterwards every nonzero
    off-diagonal entry is annihilated.  Returns ``(sweeps_done, off_norm)``
    without raising, so the caller owns the convergence decision.
    """
    n = work.shape[0]
    off = _offdiag_norm(work)
    sweeps = 0
    while off > target and sweeps < max_sweeps:
        thresh = 0.2 * off / (n * n) if sweeps < 3 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = work[p, q]
                if abs(apq) <= thresh:
                    continue
                app = work[p, p]
                aqq = work[q, q]
                diff = aqq - app
                if abs(apq) < 1e-150 * abs(diff):
                    # tau would overflow; first-order tangent still
                    # annihilates the entry
                    t = apq / diff
                else:
                    tau = diff / (2.0 * apq)
                    if tau >= 0.0:
                        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                    else:
                        t = 1.0 / (tau - math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = work[:, p].copy()
                col_q = work[:, q].copy()
                new_p = c * col_p - s * col_q
                new_q = s * col_p + c * col_q
                work[:, p] = new_p
                work[p, :] = new_p
                work[:, q] = new_q
                work[q, :] = new_q
                work[p, p] = app - t * apq
                work[q, q] = aqq + t * apq
                work[p, q] = 0.0
                work[q, p] = 0.0
        sweeps += 1
        off = _offdiag_norm(work)
    return sweeps, off
