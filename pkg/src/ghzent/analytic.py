"""Per-partition PPT decisions for GHZ-diagonal states, without matrices.

Across a fixed bipartition the state splits into four-dimensional blocks,
one per pair of canonical subset classes swapped by XOR with the second
group's mask.  Each block behaves like a two-qubit Bell-diagonal state
whose partial-transpose eigenvalues are, up to a factor of 2, the four
signed weight combinations computed here.  Positivity of every block
coefficient is therefore equivalent to positivity of the partial
transpose, which in turn decides biseparability across the partition; a
state is fully entangled exactly when every partition fails the test.

The factor of 2 never matters: only the coefficient signs enter the
verdict, and the dense oracle arbitrates actual spectra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .state import GhzDiagonalState
from .subsets import Bipartition, SubsetMask, canonical_beta, enumerate_bipartitions

COEFFICIENT_TOL = 1e-12

COEFFICIENT_NAMES = ("B", "C", "D", "E")


@dataclass(frozen=True)
class BlockCoefficients:
    """One block's weights and its four partial-transpose sign coefficients.

    ``b, c, d, e`` are twice the eigenvalues of the block's partial
    transpose; the block is positive under partial transposition iff all
    four are nonnegative.
    """

    lambda_plus: float
    lambda_minus: float
    eta_plus: float
    eta_minus: float
    b: float
    c: float
    d: float
    e: float

    @property
    def block_mass(self) -> float:
        return self.lambda_plus + self.lambda_minus + self.eta_plus + self.eta_minus

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.b, self.c, self.d, self.e)


@dataclass(frozen=True)
class CoefficientWitness:
    """The minimizing coefficient of a partition scan."""

    beta: SubsetMask
    coefficient: str
    value: float


@dataclass(frozen=True)
class PartitionVerdict:
    partition: Bipartition
    is_ppt: bool
    worst: CoefficientWitness


@dataclass(frozen=True)
class ClassificationReport:
    """Per-partition PPT verdicts plus the full-entanglement conclusion.

    A PPT partition certifies the state biseparable across that split;
    ``full_entangled`` holds exactly when no partition is PPT.
    """

    n: int
    partitions: tuple[PartitionVerdict, ...]
    full_entangled: bool

    @property
    def ppt_partitions(self) -> tuple[Bipartition, ...]:
        return tuple(v.partition for v in self.partitions if v.is_ppt)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "full_entangled": self.full_entangled,
            "partitions": [
                {
                    "alpha1": v.partition.alpha1.bit_string(),
                    "ppt": v.is_ppt,
                    "worst": {
                        "beta": v.worst.beta.bit_string(),
                        "coeff": v.worst.coefficient,
                        "value": v.worst.value,
                    },
                }
                for v in self.partitions
            ],
        }


def _check_compatible(state: GhzDiagonalState, partition: Bipartition) -> None:
    if partition.n != state.n:
        raise ValueError(f"mixed qubit counts {partition.n} and {state.n}")


def eta_pair(
    state: GhzDiagonalState, beta: SubsetMask, partition: Bipartition
) -> tuple[float, float]:
    """Weights of the partner class reached by XOR with the second group.

    The partner vectors of a class relative to a partition coincide with
    the GHZ vectors of ``beta XOR alpha2``, so their quadratic forms are a
    plain weight lookup; no inner products are evaluated here.
    """
    _check_compatible(state, partition)
    if beta.n != state.n:
        raise ValueError(f"mixed qubit counts {beta.n} and {state.n}")
    k = canonical_beta(beta).bits ^ partition.alpha2.bits
    return float(state.lambda_plus[k]), float(state.lambda_minus[k])


def block_coefficients(
    state: GhzDiagonalState, beta: SubsetMask, partition: Bipartition
) -> BlockCoefficients:
    """The four signed combinations deciding one block's PPT status."""
    _check_compatible(state, partition)
    lp = state.weight(beta, +1)
    lm = state.weight(beta, -1)
    ep, em = eta_pair(state, beta, partition)
    return BlockCoefficients(
        lambda_plus=lp,
        lambda_minus=lm,
        eta_plus=ep,
        eta_minus=em,
        b=lp - lm + ep + em,
        c=lp + lm - ep + em,
        d=lp + lm + ep - em,
        e=-lp + lm + ep + em,
    )


def coefficient_arrays(
    state: GhzDiagonalState, partition: Bipartition
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized (B, C, D, E) over all canonical classes at once.

    This is the whole analytic hot path: one XOR-permuted weight lookup
    and a handful of array sums per partition.
    """
    _check_compatible(state, partition)
    lp = state.lambda_plus
    lm = state.lambda_minus
    idx = np.arange(lp.size) ^ partition.alpha2.bits
    ep = lp[idx]
    em = lm[idx]
    return (lp - lm + ep + em, lp + lm - ep + em, lp + lm + ep - em, -lp + lm + ep + em)


def is_ppt(
    state: GhzDiagonalState, partition: Bipartition, tol: float = COEFFICIENT_TOL
) -> tuple[bool, CoefficientWitness]:
    """PPT verdict for one partition, with the minimizing coefficient.

    True iff every block coefficient is nonnegative (within ``tol``),
    which certifies the state biseparable across the partition.  Ties on
    the worst value resolve to the smallest class index, then B, C, D, E
    order, so reports are deterministic.
    """
    b, c, d, e = coefficient_arrays(state, partition)
    table = np.stack([b, c, d, e], axis=1)
    flat = int(np.argmin(table))
    k, which = divmod(flat, 4)
    value = float(table[k, which])
    witness = CoefficientWitness(SubsetMask(k, state.n), COEFFICIENT_NAMES[which], value)
    return value >= -tol, witness


def classify(state: GhzDiagonalState, tol: float = COEFFICIENT_TOL) -> ClassificationReport:
    """Scan every bipartition; fully entangled iff none is PPT."""
    verdicts = []
    for partition in enumerate_bipartitions(state.n):
        ppt, worst = is_ppt(state, partition, tol)
        verdicts.append(PartitionVerdict(partition, ppt, worst))
    return ClassificationReport(
        n=state.n,
        partitions=tuple(verdicts),
        full_entangled=not any(v.is_ppt for v in verdicts),
    )


def noise_threshold(state: GhzDiagonalState, partition: Bipartition) -> float:
    """Smallest white-noise level at which the partition turns PPT.

    Every coefficient is affine in the mixing probability and equals
    2/2^n at full depolarization, so the exact threshold is the largest
    root over the negative coefficients, clamped to [0, 1].
    """
    _check_compatible(state, partition)
    coeffs = np.concatenate(coefficient_arrays(state, partition))
    negative = coeffs[coeffs < 0.0]
    if negative.size == 0:
        return 0.0
    uniform = 2.0 / (1 << state.n)
    roots = -negative / (uniform - negative)
    return float(min(max(float(roots.max()), 0.0), 1.0))


def full_entanglement_threshold(state: GhzDiagonalState) -> float:
    """Noise level at which full entanglement is first lost.

    The minimum over partitions of the per-partition threshold: past it,
    some partition is PPT and hence biseparable.
    """
    return min(noise_threshold(state, p) for p in enumerate_bipartitions(state.n))


__all__ = [
    "BlockCoefficients",
    "ClassificationReport",
    "CoefficientWitness",
    "COEFFICIENT_NAMES",
    "COEFFICIENT_TOL",
    "PartitionVerdict",
    "block_coefficients",
    "classify",
    "coefficient_arrays",
    "eta_pair",
    "full_entanglement_threshold",
    "is_ppt",
    "noise_threshold",
]
