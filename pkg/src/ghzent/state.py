"""GHZ-diagonal states and their dense-matrix counterparts.

A GHZ-diagonal state is a mixture of GHZ projectors.  It is stored as one
(plus, minus) weight pair per canonical subset class, normalized so the
plain sum of all stored weights is 1; each class stands for itself and its
complementary subset, which share the same projectors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .basis import ghz_vector
from .subsets import (
    MAX_QUBITS,
    SubsetMask,
    canonical_beta,
    enumerate_canonical_betas,
)

NORMALIZATION_TOL = 1e-10
WEIGHT_CLAMP = 1e-12
MAX_DENSE_QUBITS = 10


def _clean_weights(values, n: int, name: str) -> np.ndarray:
    arr = np.array(values, dtype=float)
    expected = 1 << (n - 1)
    if arr.shape != (expected,):
        raise ValueError(f"{name} must have {expected} entries for n={n}, got shape {arr.shape}")
    tiny = (arr < 0.0) & (arr >= -WEIGHT_CLAMP)
    arr[tiny] = 0.0
    if (arr < 0.0).any():
        k = int(np.argmin(arr))
        raise ValueError(f"negative weight {arr[k]} in {name} at class index {k}")
    arr.flags.writeable = False
    return arr


class GhzDiagonalState:
    """Weights of a GHZ-projector mixture, one pair per canonical class.

    ``lambda_plus[k]`` and ``lambda_minus[k]`` weight the +/- vectors of the
    canonical class whose basis index is ``k``.  Instances are immutable.
    """

    __slots__ = ("_n", "_lambda_plus", "_lambda_minus")

    def __init__(self, n: int, lambda_plus, lambda_minus):
        if not 2 <= n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in 2..{MAX_QUBITS}, got {n}")
        lp = _clean_weights(lambda_plus, n, "lambda_plus")
        lm = _clean_weights(lambda_minus, n, "lambda_minus")
        total = float(lp.sum() + lm.sum())
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise ValueError(f"bad normalization: weights sum to {total}, expected 1")
        self._n = n
        self._lambda_plus = lp
        self._lambda_minus = lm

    @property
    def n(self) -> int:
        return self._n

    @property
    def num_classes(self) -> int:
        return 1 << (self._n - 1)

    @property
    def lambda_plus(self) -> np.ndarray:
        return self._lambda_plus

    @property
    def lambda_minus(self) -> np.ndarray:
        return self._lambda_minus

    def weight(self, beta: SubsetMask, sign: int) -> float:
        """Stored weight of the class containing ``beta``."""
        if beta.n != self._n:
            raise ValueError(f"mixed qubit counts {beta.n} and {self._n}")
        k = canonical_beta(beta).bits
        arr = self._lambda_plus if sign == 1 else self._lambda_minus
        return float(arr[k])

    @classmethod
    def pure_ghz(cls, n: int) -> "GhzDiagonalState":
        """The standard GHZ state: unit weight on the + empty class."""
        k = 1 << (n - 1)
        lp = np.zeros(k)
        lp[0] = 1.0
        return cls(n, lp, np.zeros(k))

    @classmethod
    def maximally_mixed(cls, n: int) -> "GhzDiagonalState":
        k = 1 << (n - 1)
        w = np.full(k, 1.0 / (1 << n))
        return cls(n, w, w.copy())

    def __eq__(self, other) -> bool:
        if not isinstance(other, GhzDiagonalState):
            return NotImplemented
        return (
            self._n == other._n
            and np.array_equal(self._lambda_plus, other._lambda_plus)
            and np.array_equal(self._lambda_minus, other._lambda_minus)
        )

    def __repr__(self) -> str:
        nz = int(np.count_nonzero(self._lambda_plus) + np.count_nonzero(self._lambda_minus))
        return f"GhzDiagonalState(n={self._n}, nonzero_weights={nz})"


@dataclass(frozen=True)
class DenseOperator:
    """Real symmetric operator on n qubits, exactly symmetric by contract."""

    matrix: np.ndarray
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_DENSE_QUBITS:
            raise ValueError(f"dense path supports 1..{MAX_DENSE_QUBITS} qubits, got {self.n}")
        m = self.matrix
        dim = 1 << self.n
        if m.shape != (dim, dim):
            raise ValueError(f"matrix shape {m.shape} does not match n={self.n}")
        if not np.array_equal(m, m.T):
            i, j = np.unravel_index(int(np.argmax(np.abs(m - m.T))), m.shape)
            raise ValueError(f"matrix not exactly symmetric, worst element ({i},{j})")

    @classmethod
    def from_matrix(cls, matrix, symmetrize: bool = False) -> "DenseOperator":
        m = np.array(matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        n = int(m.shape[0]).bit_length() - 1
        if (1 << n) != m.shape[0]:
            raise ValueError(f"dimension {m.shape[0]} is not a power of two")
        if symmetrize:
            m = (m + m.T) / 2.0
        return cls(m, n)

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix))


def _dense_from_weights(n: int, lambda_plus: np.ndarray, lambda_minus: np.ndarray) -> np.ndarray:
    dim = 1 << n
    k = np.arange(1 << (n - 1))
    kc = k ^ (dim - 1)
    diag = (lambda_plus + lambda_minus) / 2.0
    anti = (lambda_plus - lambda_minus) / 2.0
    m = np.zeros((dim, dim))
    m[k, k] = diag
    m[kc, kc] = diag
    m[k, kc] = anti
    m[kc, k] = anti
    return m


def to_dense(state: GhzDiagonalState) -> DenseOperator:
    """Dense matrix of the state: nonzero only on diagonal and anti-diagonal."""
    if state.n > MAX_DENSE_QUBITS:
        raise ValueError(f"dense path capped at {MAX_DENSE_QUBITS} qubits, got n={state.n}")
    return DenseOperator(_dense_from_weights(state.n, state.lambda_plus, state.lambda_minus), state.n)


def extract_lambda(rho: DenseOperator, beta: SubsetMask, sign: int) -> float:
    """Quadratic form of the operator on a GHZ basis vector.

    For GHZ-diagonal inputs this recovers the stored weight of the class.
    """
    if beta.n != rho.n:
        raise ValueError(f"mixed qubit counts {beta.n} and {rho.n}")
    (i, a), (j, b) = ghz_vector(beta, sign).entries
    m = rho.matrix
    return float(a * a * m[i, i] + b * b * m[j, j] + 2.0 * a * b * m[i, j])


def twirl_to_ghz_diagonal(rho: DenseOperator, strict: bool = False) -> tuple[GhzDiagonalState, float]:
    """Project an operator onto the GHZ-diagonal family.

    Keeps the diagonal GHZ-basis weights and renormalizes them to the
    canonical convention.  Returns the state together with the Frobenius
    norm of the discarded remainder, which is 0 exactly when the input was
    already GHZ-diagonal.  Positivity of the input is the caller's problem
    unless ``strict`` is set, which runs the dense eigensolver.
    """
    n = rho.n
    if n < 2:
        raise ValueError("a GHZ-diagonal state needs at least 2 qubits")
    if strict:
        from .oracle import DEFAULT_ORACLE, eigenvalues_symmetric

        low = eigenvalues_symmetric(rho).min_eigenvalue
        if low < -DEFAULT_ORACLE.psd_tol:
            raise ValueError(f"input operator is not positive: min eigenvalue {low}")
    classes = 1 << (n - 1)
    lp = np.empty(classes)
    lm = np.empty(classes)
    for k in range(classes):
        beta = SubsetMask(k, n)
        lp[k] = extract_lambda(rho, beta, +1)
        lm[k] = extract_lambda(rho, beta, -1)
    discarded = float(np.linalg.norm(rho.matrix - _dense_from_weights(n, lp, lm)))
    total = float(lp.sum() + lm.sum())
    if total <= 0.0:
        raise ValueError(f"operator has nonpositive trace {total}")
    return GhzDiagonalState(n, lp / total, lm / total), discarded


def random_state(n: int, seed: int) -> GhzDiagonalState:
    """Uniform draw from the weight simplex (flat Dirichlet), seeded."""
    if n < 2:
        raise ValueError(f"need at least 2 qubits, got n={n}")
    rng = np.random.default_rng(seed)
    w = rng.exponential(size=(1 << (n - 1), 2))
    w /= w.sum()
    return GhzDiagonalState(n, w[:, 0], w[:, 1])


def mix_with_white_noise(state: GhzDiagonalState, p: float) -> GhzDiagonalState:
    """Depolarize: blend every weight toward the maximally mixed 1/2^n."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing probability must be in [0, 1], got {p}")
    floor = p / (1 << state.n)
    return GhzDiagonalState(
        state.n,
        (1.0 - p) * state.lambda_plus + floor,
        (1.0 - p) * state.lambda_minus + floor,
    )


def state_to_json_dict(state: GhzDiagonalState) -> dict:
    """JSON form listing only the classes that carry weight."""
    weights = []
    for k in range(state.num_classes):
        plus = float(state.lambda_plus[k])
        minus = float(state.lambda_minus[k])
        if plus != 0.0 or minus != 0.0:
            weights.append({"beta": format(k, f"0{state.n}b"), "plus": plus, "minus": minus})
    return {"n": state.n, "convention": "canonical", "weights": weights}


def state_from_json_dict(data: dict) -> GhzDiagonalState:
    """Read a state from its JSON form.

    ``convention`` selects the weight bookkeeping: ``canonical`` (default)
    lists each class once under its canonical bit string; ``full`` may
    list any subset, a class and its complement must then agree.  Omitted
    classes default to zero weight.
    """
    if not isinstance(data, dict):
        raise ValueError("state JSON must be an object")
    try:
        n = int(data["n"])
    except (KeyError, TypeError, ValueError):
        raise ValueError("field 'n' must be an integer qubit count") from None
    if not 2 <= n <= MAX_QUBITS:
        raise ValueError(f"field 'n' must be in 2..{MAX_QUBITS}, got {n}")
    convention = data.get("convention", "canonical")
    if convention not in ("canonical", "full"):
        raise ValueError(f"field 'convention' must be 'canonical' or 'full', got {convention!r}")
    entries = data.get("weights", [])
    if not isinstance(entries, list):
        raise ValueError("field 'weights' must be a list")

    classes = 1 << (n - 1)
    lp = np.zeros(classes)
    lm = np.zeros(classes)
    seen: dict[int, tuple[float, float]] = {}
    for pos, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise ValueError(f"field 'weights[{pos}]' must be an object")
        try:
            bit_string = entry["beta"]
            mask = SubsetMask.from_bit_string(bit_string)
        except (KeyError, TypeError, ValueError):
            raise ValueError(f"field 'weights[{pos}].beta' must be an n-digit bit string") from None
        if mask.n != n:
            raise ValueError(f"field 'weights[{pos}].beta' has {mask.n} digits, expected {n}")
        try:
            plus = float(entry.get("plus", 0.0))
            minus = float(entry.get("minus", 0.0))
        except (TypeError, ValueError):
            raise ValueError(f"field 'weights[{pos}]' plus/minus must be numbers") from None
        if convention == "canonical":
            if mask.contains(1):
                raise ValueError(
                    f"field 'weights[{pos}].beta' = {bit_string!r} is not canonical "
                    "(canonical classes exclude qubit 1)"
                )
            k = mask.bits
        else:
            k = canonical_beta(mask).bits
        if k in seen:
            prev = seen[k]
            if abs(prev[0] - plus) > WEIGHT_CLAMP or abs(prev[1] - minus) > WEIGHT_CLAMP:
                raise ValueError(
                    f"field 'weights[{pos}].beta' repeats class {format(k, f'0{n}b')} "
                    "with conflicting values"
                )
            continue
        seen[k] = (plus, minus)
        lp[k] = plus
        lm[k] = minus
    return GhzDiagonalState(n, lp, lm)


def dump_state(state: GhzDiagonalState, indent: int | None = 2) -> str:
    return json.dumps(state_to_json_dict(state), indent=indent)


def load_state(text: str) -> GhzDiagonalState:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from None
    return state_from_json_dict(data)
