"""Brute-force ground truth for the analytic classifier.

Partial transposition is an explicit bit-indexed element swap on the full
matrix, and positivity is read off a dense real-symmetric eigensolver.
Nothing here exploits GHZ structure; that is the point of an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analytic import coefficient_arrays
from .state import DenseOperator, GhzDiagonalState, to_dense
from .subsets import Bipartition, SubsetMask


@dataclass(frozen=True)
class OracleTolerances:
    """All oracle-side tolerances and caps in one place.

    Eigensolver error dominates on this path, so the positivity floor is
    much looser than the analytic side's.
    """

    psd_tol: float = 1e-9
    spectrum_tol: float = 1e-9
    dimension_cap: int = 1024
    comparison_max_qubits: int = 8


DEFAULT_ORACLE = OracleTolerances()


@dataclass(frozen=True)
class SpectrumResult:
    """Full spectrum of a symmetric matrix, ascending, with a residual check."""

    eigenvalues: np.ndarray
    min_eigenvalue: float
    residual: float


def partial_transpose(rho: DenseOperator, alpha: SubsetMask) -> DenseOperator:
    """Transpose the tensor factors of the qubits in ``alpha``.

    Element-wise: the alpha bits of the row and column indices are
    exchanged.  The empty set is the identity; the full set is total
    transposition.
    """
    if alpha.n != rho.n:
        raise ValueError(f"mixed qubit counts {alpha.n} and {rho.n}")
    dim = rho.dim
    m = alpha.bits
    keep = (dim - 1) ^ m
    idx = np.arange(dim)
    r = idx[:, None]
    c = idx[None, :]
    return DenseOperator(rho.matrix[(r & keep) | (c & m), (c & keep) | (r & m)], rho.n)


def eigenvalues_symmetric(
    m: DenseOperator | np.ndarray, tolerances: OracleTolerances = DEFAULT_ORACLE
) -> SpectrumResult:
    """Full real spectrum of a symmetric matrix, sorted ascending.

    Delegates to LAPACK's symmetric eigensolver and reports the worst
    residual max-norm of M v - e v so callers can see the achieved
    accuracy.  Non-convergence raises instead of looping.
    """
    mat = m.matrix if isinstance(m, DenseOperator) else np.asarray(m, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    if mat.shape[0] > tolerances.dimension_cap:
        raise ValueError(f"dimension {mat.shape[0]} exceeds cap {tolerances.dimension_cap}")
    if not np.array_equal(mat, mat.T):
        raise ValueError("matrix is not symmetric")
    try:
        evals, vecs = np.linalg.eigh(mat)
    except np.linalg.LinAlgError as exc:
        raise ArithmeticError(f"eigensolver failed to converge: {exc}") from exc
    residual = float(np.max(np.abs(mat @ vecs - vecs * evals))) if mat.size else 0.0
    evals.flags.writeable = False
    return SpectrumResult(evals, float(evals[0]), residual)


def is_ppt_dense(
    state: GhzDiagonalState,
    partition: Bipartition,
    tolerances: OracleTolerances = DEFAULT_ORACLE,
) -> bool:
    """Positivity of the dense partial transpose across one partition."""
    if state.n > tolerances.comparison_max_qubits:
        raise ValueError(
            f"dense oracle capped at {tolerances.comparison_max_qubits} qubits, got n={state.n}"
        )
    if partition.n != state.n:
        raise ValueError(f"mixed qubit counts {partition.n} and {state.n}")
    pt = partial_transpose(to_dense(state), partition.alpha1)
    return eigenvalues_symmetric(pt, tolerances).min_eigenvalue >= -tolerances.psd_tol


def pt_spectrum_vs_coefficients(state: GhzDiagonalState, partition: Bipartition) -> float:
    """Max deviation between the dense PT spectrum and the halved coefficients.

    The four block coefficients of one representative per complementary
    class pair, divided by two, form the complete partial-transpose
    spectrum; this returns the worst mismatch after sorting both sides.
    """
    if state.n > DEFAULT_ORACLE.comparison_max_qubits:
        raise ValueError(
            f"dense oracle capped at {DEFAULT_ORACLE.comparison_max_qubits} qubits, got n={state.n}"
        )
    b, c, d, e = coefficient_arrays(state, partition)
    k = np.arange(b.size)
    rep = k < (k ^ partition.alpha2.bits)
    analytic = np.sort(np.concatenate([b[rep], c[rep], d[rep], e[rep]]) / 2.0)
    dense = eigenvalues_symmetric(partial_transpose(to_dense(state), partition.alpha1)).eigenvalues
    return float(np.max(np.abs(analytic - dense)))
