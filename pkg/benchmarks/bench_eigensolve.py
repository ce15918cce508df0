#!/usr/bin/env python3
"""Benchmark the compiled Jacobi kernel against the pure NumPy fallback.

Builds representative signless Laplacian matrices (random threshold graphs
at each size), times repeated solves per backend and reports per-solve
times, speedup, and the largest eigenvalue deviation between backends.

Usage: python benchmarks/bench_eigensolve.py [--sizes 8,12,16,24,32,48]
"""

import argparse
import time

import numpy as np

from threshold_spectra import assemble_q, normalize
from threshold_spectra.solver import available_backends, jacobi_eigenvalues

MATRICES_PER_SIZE = 8


def build_matrices(n: int, rng: np.random.Generator) -> list[np.ndarray]:
    mats = []
    for _ in range(MATRICES_PER_SIZE):
        bits = rng.integers(0, 2, size=n)
        bits[0] = bits[1]
        mats.append(assemble_q(normalize(tuple(int(b) for b in bits))))
    return mats


def time_backend(mats: list[np.ndarray], backend: str, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for m in mats:
            jacobi_eigenvalues(m, backend=backend)
        best = min(best, (time.perf_counter() - start) / len(mats))
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="8,12,16,24,32,48")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = available_backends()
    print(f"available backends: {', '.join(backends)}")
    if "cython" not in backends:
        print("compiled kernel not built; timing the fallback only")

    rng = np.random.default_rng(20240611)
    header = f"{'n':>4}  {'python ms':>10}"
    if "cython" in backends:
        header += f"  {'cython ms':>10}  {'speedup':>8}  {'max |dλ|':>10}"
    print(header)
    for n in sizes:
        mats = build_matrices(n, rng)
        t_py = time_backend(mats, "python", args.repeats)
        line = f"{n:>4}  {t_py * 1e3:>10.3f}"
        if "cython" in backends:
            t_cy = time_backend(mats, "cython", args.repeats)
            dev = max(
                float(
                    np.abs(
                        jacobi_eigenvalues(m, backend="cython")
                        - jacobi_eigenvalues(m, backend="python")
                    ).max()
                )
                for m in mats
            )
            line += f"  {t_cy * 1e3:>10.3f}  {t_py / t_cy:>8.1f}  {dev:>10.2e}"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
