"""Symmetric eigensolver: cyclic Jacobi with threshold pivoting.

The sweep kernel exists twice: a compiled Cython core and a pure NumPy
fallback with identical rotation arithmetic.  The compiled core is preferred
at import time when the extension built; ``backend=`` selects one explicitly
(used by the benchmark and the cross-checking tests).
"""

from __future__ import annotations

import numpy as np

from . import _jacobi_py

MAX_SWEEPS = 100
DEFAULT_TOL = 1e-12

_BACKENDS = {"python": _jacobi_py}
try:
    from . import _jacobi

    _BACKENDS["cython"] = _jacobi
except ImportError:
    pass

BACKEND = "cython" if "cython" in _BACKENDS else "python"


class ConvergenceError(RuntimeError):
    """Raised when the sweep cap is hit; carries the off-diagonal residual."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def solver_backend() -> str:
    """Name of the kernel selected at import time."""
    return BACKEND


def jacobi_eigenvalues(
    a: np.ndarray,
    tol: float = DEFAULT_TOL,
    max_sweeps: int = MAX_SWEEPS,
    backend: str | None = None,
) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, ascending.

    Sweeps run until the off-diagonal Frobenius norm drops below
    ``tol * max(1, frobenius(a))``; hitting ``max_sweeps`` first raises
    :class:`ConvergenceError` with the residual attached.
    """
    if tol <= 0.0:
        raise ValueError("tolerance must be positive")
    work = np.array(a, dtype=np.float64, order="C", copy=True)
    if work.ndim != 2 or work.shape[0] != work.shape[1]:
        raise ValueError(f"matrix must be square, got shape {work.shape}")
    if not np.isfinite(work).all():
        raise ValueError("matrix entries must be finite")
    if not np.array_equal(work, work.T):
        raise ValueError("matrix must be symmetric")
    impl = _BACKENDS[backend] if backend is not None else _BACKENDS[BACKEND]
    fro = float(np.sqrt(np.sum(work * work)))
    target = tol * max(1.0, fro)
    _, off = impl.jacobi_cycle(work, target, max_sweeps)
    if off > target:
        raise ConvergenceError(
            f"no convergence after {max_sweeps} sweeps "
            f"(off-diagonal residual {off:.3e} > target {target:.3e})",
            residual=off,
        )
    return np.sort(np.diagonal(work).copy())
