"""Threshold-graph signless Laplacian spectra and exhaustive theorem checks.

Construct threshold graphs from binary creation sequences, compute their
signless Laplacian spectra both from block structure and with a dense Jacobi
eigensolver, and machine-verify the interlacing chains and the
eigenvalue-sum bound over every graph at desk scale.
"""

from .brouwer import BrouwerReport, check_brouwer, check_lemma14, check_lemma15, partial_sums
from .graphs import (
    DegreeProfile,
    SequenceError,
    ThresholdGraph,
    block_degrees,
    complement,
    enumerate_graphs,
    ferrers,
    graph_from_counter,
    is_edge,
    normalize,
    parse,
    parse_bits,
)
from .interlace import (
    ChainLink,
    InterlacingReport,
    check_append_one,
    check_complement_interlacing,
    check_condensed_interlacing,
    check_degree_interlacing,
)
from .solver import ConvergenceError, available_backends, jacobi_eigenvalues, solver_backend
from .spectra import (
    BlockEigenpairs,
    Spectrum,
    assemble_condensed,
    assemble_q,
    condensed_complement,
    condensed_spectrum,
    direct_eigenpairs,
    eigensolve,
    full_spectrum,
    q_spectrum,
)
from .sweep import run_sweep

__version__ = "0.1.0"

__all__ = [
    "BlockEigenpairs",
    "BrouwerReport",
    "ChainLink",
    "ConvergenceError",
    "DegreeProfile",
    "InterlacingReport",
    "SequenceError",
    "Spectrum",
    "ThresholdGraph",
    "assemble_condensed",
    "assemble_q",
    "available_backends",
    "block_degrees",
    "check_append_one",
    "check_brouwer",
    "check_complement_interlacing",
    "check_condensed_interlacing",
    "check_degree_interlacing",
    "check_lemma14",
    "check_lemma15",
    "complement",
    "condensed_complement",
    "condensed_spectrum",
    "direct_eigenpairs",
    "eigensolve",
    "enumerate_graphs",
    "ferrers",
    "full_spectrum",
    "graph_from_counter",
    "is_edge",
    "jacobi_eigenvalues",
    "normalize",
    "parse",
    "parse_bits",
    "partial_sums",
    "q_spectrum",
    "run_sweep",
    "solver_backend",
]
