"""Build script for the optional compiled Jacobi sweep kernel.

The extension is marked optional: if no C compiler (or Cython) is available
the install still succeeds and the package falls back to the pure NumPy
kernel at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "threshold_spectra._jacobi",
                ["src/threshold_spectra/_jacobi.pyx"],
                # -O3 only: no -ffast-math / -march=native, the kernel must
                # keep IEEE semantics so results are reproducible.
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
