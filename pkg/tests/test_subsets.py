import numpy as np
import pytest

from ghzent.subsets import (
    MAX_QUBITS,
    Bipartition,
    SubsetMask,
    canonical_beta,
    enumerate_bipartitions,
    enumerate_canonical_betas,
    l_of_beta,
)


def test_mask_construction_bounds():
    SubsetMask(0, 1)
    SubsetMask((1 << MAX_QUBITS) - 1, MAX_QUBITS)
    with pytest.raises(ValueError):
        SubsetMask(0, 0)
    with pytest.raises(ValueError):
        SubsetMask(0, MAX_QUBITS + 1)
    with pytest.raises(ValueError):
        SubsetMask(-1, 3)
    with pytest.raises(ValueError):
        SubsetMask(8, 3)


def test_qubit_one_is_most_significant_bit():
    # qubit m maps to bit n - m, so qubit 1 owns the top bit
    m = SubsetMask.from_qubits([1], 3)
    assert m.bits == 4
    assert m.bit_string() == "100"
    m = SubsetMask.from_qubits([3], 3)
    assert m.bits == 1
    assert SubsetMask.from_qubits([1, 3], 3).bits == 5


def test_from_qubits_round_trip():
    rng = np.random.default_rng(11)
    for _ in range(100):
        n = int(rng.integers(1, 13))
        qubits = sorted(
            int(q) for q in rng.choice(np.arange(1, n + 1), size=rng.integers(0, n + 1), replace=False)
        )
        m = SubsetMask.from_qubits(qubits, n)
        assert list(m.qubits()) == qubits
        assert m.size == len(qubits)
        for q in range(1, n + 1):
            assert m.contains(q) == (q in qubits)


def test_from_qubits_rejects_out_of_range():
    with pytest.raises(ValueError):
        SubsetMask.from_qubits([0], 3)
    with pytest.raises(ValueError):
        SubsetMask.from_qubits([4], 3)


def test_bit_string_round_trip():
    rng = np.random.default_rng(21)
    for _ in range(100):
        n = int(rng.integers(1, 16))
        bits = int(rng.integers(0, 1 << n))
        m = SubsetMask(bits, n)
        s = m.bit_string()
        assert len(s) == n
        assert SubsetMask.from_bit_string(s) == m
        assert int(s, 2) == bits


def test_from_bit_string_rejects_junk():
    with pytest.raises(ValueError):
        SubsetMask.from_bit_string("01x")
    with pytest.raises(ValueError):
        SubsetMask.from_bit_string("")


def test_complement_and_xor():
    rng = np.random.default_rng(31)
    for _ in range(200):
        n = int(rng.integers(1, 16))
        a = SubsetMask(int(rng.integers(0, 1 << n)), n)
        b = SubsetMask(int(rng.integers(0, 1 << n)), n)
        assert a.complement().complement() == a
        assert a.xor(a) == SubsetMask.empty(n)
        assert a.xor(SubsetMask.empty(n)) == a
        assert a.xor(b) == b.xor(a)
        assert a.xor(a.complement()) == SubsetMask.full(n)
    with pytest.raises(ValueError):
        SubsetMask(0, 2).xor(SubsetMask(0, 3))


def test_empty_full_flags():
    e = SubsetMask.empty(4)
    f = SubsetMask.full(4)
    assert e.is_empty and not e.is_full
    assert f.is_full and not f.is_empty
    assert e.size == 0 and f.size == 4


def test_basis_index_is_mask_value():
    for n in range(1, 8):
        for bits in range(1 << n):
            assert l_of_beta(SubsetMask(bits, n)) == bits


def test_canonical_beta_excludes_qubit_one():
    rng = np.random.default_rng(41)
    for _ in range(200):
        n = int(rng.integers(2, 14))
        m = SubsetMask(int(rng.integers(0, 1 << n)), n)
        c = canonical_beta(m)
        assert not c.contains(1)
        assert c == m or c == m.complement()
        assert canonical_beta(c) == c


def test_enumerate_canonical_betas():
    for n in range(2, 9):
        betas = enumerate_canonical_betas(n)
        assert len(betas) == 1 << (n - 1)
        assert [b.bits for b in betas] == list(range(1 << (n - 1)))
        assert all(not b.contains(1) for b in betas)


def test_bipartition_rejects_trivial_cuts():
    with pytest.raises(ValueError):
        Bipartition(SubsetMask.empty(3))
    with pytest.raises(ValueError):
        Bipartition(SubsetMask.full(3))


def test_bipartition_canonicalizes_to_group_with_qubit_one():
    p = Bipartition(SubsetMask.from_qubits([2, 3], 3))
    assert p.alpha1 == SubsetMask.from_qubits([1], 3)
    assert p.alpha2 == SubsetMask.from_qubits([2, 3], 3)
    q = Bipartition(SubsetMask.from_qubits([1], 3))
    assert p == q
    assert p.alpha1.xor(p.alpha2).is_full


def test_split_string():
    assert Bipartition(SubsetMask.from_qubits([1], 3)).split_string() == "1|23"
    assert Bipartition(SubsetMask.from_qubits([1, 3], 3)).split_string() == "13|2"
    assert Bipartition(SubsetMask.from_qubits([1, 2], 3)).split_string() == "12|3"
    # double digit labels switch to comma separation
    s = Bipartition(SubsetMask.from_qubits([1, 10], 10)).split_string()
    assert s == "1,10|2,3,4,5,6,7,8,9"


def test_enumerate_bipartitions():
    for n in range(2, 10):
        parts = enumerate_bipartitions(n)
        assert len(parts) == (1 << (n - 1)) - 1
        assert len(set(parts)) == len(parts)
        for p in parts:
            assert p.alpha1.contains(1)
            assert not p.alpha1.is_full
    with pytest.raises(ValueError):
        enumerate_bipartitions(1)


def test_two_qubit_single_cut():
    parts = enumerate_bipartitions(2)
    assert len(parts) == 1
    assert parts[0].split_string() == "1|2"
