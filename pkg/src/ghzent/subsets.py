"""Bitmask algebra for qubit subsets and bipartitions.

Qubits are numbered 1..n.  Qubit ``m`` occupies bit ``n - m`` of a mask, so
qubit 1 sits in the most significant position and the numeric value of a
mask equals the computational-basis index whose binary digits are the
subset's indicator string.  That makes subset masks double as basis
indices with no translation layer.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_QUBITS = 24


@dataclass(frozen=True)
class SubsetMask:
    """A subset of qubits 1..n packed into the low ``n`` bits of an int."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in 1..{MAX_QUBITS}, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"mask {self.bits} out of range for n={self.n}")

    @classmethod
    def from_qubits(cls, qubits, n: int) -> "SubsetMask":
        """Build a mask from an iterable of 1-based qubit numbers."""
        bits = 0
        for m in qubits:
            if not 1 <= m <= n:
                raise ValueError(f"qubit {m} out of range 1..{n}")
            bits |= 1 << (n - m)
        return cls(bits, n)

    @classmethod
    def from_bit_string(cls, s: str) -> "SubsetMask":
        if not s or any(ch not in "01" for ch in s):
            raise ValueError(f"bit string must be nonempty over {{0,1}}, got {s!r}")
        return cls(int(s, 2), len(s))

    @classmethod
    def empty(cls, n: int) -> "SubsetMask":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "SubsetMask":
        return cls((1 << n) - 1, n)

    def complement(self) -> "SubsetMask":
        return SubsetMask(self.bits ^ ((1 << self.n) - 1), self.n)

    def xor(self, other: "SubsetMask") -> "SubsetMask":
        if other.n != self.n:
            raise ValueError(f"mixed qubit counts {self.n} and {other.n}")
        return SubsetMask(self.bits ^ other.bits, self.n)

    def contains(self, qubit: int) -> bool:
        if not 1 <= qubit <= self.n:
            raise ValueError(f"qubit {qubit} out of range 1..{self.n}")
        return bool(self.bits >> (self.n - qubit) & 1)

    def qubits(self) -> tuple[int, ...]:
        """The contained qubits in increasing order."""
        return tuple(m for m in range(1, self.n + 1) if self.bits >> (self.n - m) & 1)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    @property
    def is_full(self) -> bool:
        return self.bits == (1 << self.n) - 1

    def bit_string(self) -> str:
        """Indicator string, one digit per qubit, qubit 1 first."""
        return format(self.bits, f"0{self.n}b")

    def __repr__(self) -> str:
        return f"SubsetMask({self.bit_string()!r})"


@dataclass(frozen=True)
class Bipartition:
    """A split of qubits 1..n into two nonempty groups.

    Only one side is stored.  The representative ``alpha1`` is the side
    containing qubit 1, so a split and its mirror image compare equal.
    """

    alpha1: SubsetMask

    def __post_init__(self) -> None:
        a = self.alpha1
        if a.is_empty or a.is_full:
            raise ValueError("both sides of a bipartition must be nonempty")
        if not a.contains(1):
            object.__setattr__(self, "alpha1", a.complement())

    @classmethod
    def from_qubits(cls, qubits, n: int) -> "Bipartition":
        return cls(SubsetMask.from_qubits(qubits, n))

    @property
    def n(self) -> int:
        return self.alpha1.n

    @property
    def alpha2(self) -> SubsetMask:
        return self.alpha1.complement()

    def split_string(self) -> str:
        """Human-readable split such as ``1|234`` (commas past 9 qubits)."""
        sep = "" if self.n <= 9 else ","
        left = sep.join(str(m) for m in self.alpha1.qubits())
        right = sep.join(str(m) for m in self.alpha2.qubits())
        return f"{left}|{right}"

    def __repr__(self) -> str:
        return f"Bipartition({self.split_string()!r})"


def l_of_beta(beta: SubsetMask) -> int:
    """Basis index of a subset: sum of 2^(n-m) over contained qubits m.

    By the bit layout this is just the mask value.
    """
    return beta.bits


def canonical_beta(beta: SubsetMask) -> SubsetMask:
    """The representative of {beta, complement} that excludes qubit 1.

    A subset and its complement label the same pair of basis vectors, so
    half the subsets suffice; the empty set is canonical.
    """
    return beta.complement() if beta.contains(1) else beta


def enumerate_canonical_betas(n: int) -> list[SubsetMask]:
    """All 2^(n-1) canonical subset classes, increasing by basis index."""
    return [SubsetMask(k, n) for k in range(1 << (n - 1))]


def enumerate_bipartitions(n: int) -> list[Bipartition]:
    """All 2^(n-1) - 1 distinct bipartitions, increasing by alpha1 mask."""
    if n < 2:
        raise ValueError(f"a bipartition needs at least 2 qubits, got n={n}")
    top = 1 << (n - 1)
    return [Bipartition(SubsetMask(top | k, n)) for k in range(top - 1)]
