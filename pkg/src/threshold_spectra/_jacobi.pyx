# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled Jacobi sweep kernel: scalar rotations, IEEE-strict arithmetic."""

from libc.math cimport fabs, sqrt


cdef double _offdiag_norm(double[:, ::1] w) noexcept nogil:
    cdef Py_ssize_t n = w.shape[0]
    cdef Py_ssize_t i, j
    cdef double s = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            s += w[i, j] * w[i, j]
    return sqrt(2.0 * s)


def jacobi_cycle(double[:, ::1] work, double target, int max_sweeps):
    """In-place cyclic Jacobi sweeps; returns ``(sweeps_done, off_norm)``.

    Same contract and pivoting rule as the NumPy fallback: entries below a
    coarse threshold are skipped during the first three sweeps, after that
    every nonzero off-diagonal entry is rotated away.
    """
    cdef Py_ssize_t n = work.shape[0]
    cdef Py_ssize_t p, q, i
    cdef double off, thresh, apq, app, aqq, diff, tau, t, c, s, aip, aiq
    cdef int sweeps = 0

    off = _offdiag_norm(work)
    while off > target and sweeps < max_sweeps:
        thresh = 0.2 * off / (n * n) if sweeps < 3 else 0.0
        with nogil:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = work[p, q]
                    if fabs(apq) <= thresh:
                        continue
                    app = work[p, p]
                    aqq = work[q, q]
                    diff = aqq - app
                    if fabs(apq) < 1e-150 * fabs(diff):
                        # tau would overflow; first-order tangent still
                        # annihilates the entry
                        t = apq / diff
                    else:
                        tau = diff / (2.0 * apq)
                        if tau >= 0.0:
                            t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                        else:
                            t = 1.0 / (tau - sqrt(1.0 + tau * tau))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    for i in range(n):
                        if i == p or i == q:
                            continue
                        aip = work[i, p]
                        aiq = work[i, q]
                        work[i, p] = c * aip - s * aiq
                        work[p, i] = work[i, p]
                        work[i, q] = s * aip + c * aiq
                        work[q, i] = work[i, q]
                    work[p, p] = app - t * apq
                    work[q, q] = aqq + t * apq
                    work[p, q] = 0.0
                    work[q, p] = 0.0
        sweeps += 1
        off = _offdiag_norm(work)
    return sweeps, off
