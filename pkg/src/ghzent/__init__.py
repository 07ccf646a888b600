"""Biseparability and full N-partite entanglement for GHZ-diagonal states.

An N-qubit GHZ-diagonal state is a mixture of the 2^N GHZ basis projectors.
For each bipartition the partial transpose decomposes into 4-dimensional
blocks whose eigenvalues are closed-form affine functions of the mixing
weights, so separability across that cut reduces to a handful of sign
checks.  The state is fully N-partite entangled exactly when every
bipartition fails its check.

The analytic path (:mod:`ghzent.analytic`) scales to two dozen qubits; the
dense path (:mod:`ghzent.oracle`) builds the 2^N-dimensional matrices and
is kept as an independent cross-check for small N.
"""

from .subsets import (
    MAX_QUBITS,
    Bipartition,
    SubsetMask,
    canonical_beta,
    enumerate_bipartitions,
    enumerate_canonical_betas,
    l_of_beta,
)
from .basis import (
    SparseStateVector,
    ghz_vector,
    inner_product,
    phi_vector,
)
from .state import (
    DenseOperator,
    GhzDiagonalState,
    dump_state,
    extract_lambda,
    load_state,
    mix_with_white_noise,
    random_state,
    state_from_json_dict,
    state_to_json_dict,
    to_dense,
    twirl_to_ghz_diagonal,
)
from .analytic import (
    BlockCoefficients,
    ClassificationReport,
    CoefficientWitness,
    PartitionVerdict,
    block_coefficients,
    classify,
    coefficient_arrays,
    eta_pair,
    full_entanglement_threshold,
    is_ppt,
    noise_threshold,
)
from .oracle import (
    DEFAULT_ORACLE,
    OracleTolerances,
    SpectrumResult,
    eigenvalues_symmetric,
    is_ppt_dense,
    partial_transpose,
    pt_spectrum_vs_coefficients,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_QUBITS",
    "SubsetMask",
    "Bipartition",
    "canonical_beta",
    "l_of_beta",
    "enumerate_canonical_betas",
    "enumerate_bipartitions",
    "SparseStateVector",
    "ghz_vector",
    "phi_vector",
    "inner_product",
    "GhzDiagonalState",
    "DenseOperator",
    "to_dense",
    "extract_lambda",
    "twirl_to_ghz_diagonal",
    "random_state",
    "mix_with_white_noise",
    "state_to_json_dict",
    "state_from_json_dict",
    "dump_state",
    "load_state",
    "BlockCoefficients",
    "CoefficientWitness",
    "PartitionVerdict",
    "ClassificationReport",
    "eta_pair",
    "block_coefficients",
    "coefficient_arrays",
    "is_ppt",
    "classify",
    "noise_threshold",
    "full_entanglement_threshold",
    "OracleTolerances",
    "DEFAULT_ORACLE",
    "SpectrumResult",
    "partial_transpose",
    "eigenvalues_symmetric",
    "is_ppt_dense",
    "pt_spectrum_vs_coefficients",
    "__version__",
]
