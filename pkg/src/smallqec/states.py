"""Dense statevectors over n qubits.

Basis convention throughout the package: qubit 1 is the leftmost symbol of a
ket string and the most significant bit of the basis index, so ``|011⟩`` on
three qubits is index 3.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

MAX_QUBITS = 10
NORM_ATOL = 1e-9


class DimensionMismatch(ValueError):
    pass


def bitstring_to_index(bits: str) -> int:
    assert set(bits) <= {"0", "1"}
    return int(bits, 2)


def index_to_bitstring(idx: int, n: int) -> str:
    return format(idx, f"0{n}b")


@dataclass(frozen=True)
class Ket:
    """A normalized pure state on ``n`` qubits, amplitudes indexed big-endian."""

    n: int
    amps: np.ndarray

    def __post_init__(self):
        assert 1 <= self.n <= MAX_QUBITS
        amps = np.asarray(self.amps, dtype=np.complex128)
        assert amps.shape == (2**self.n,)
        object.__setattr__(self, "amps", amps)
        self.amps.setflags(write=False)

    @property
    def is_normalized(self) -> bool:
        return abs(np.linalg.norm(self.amps) - 1.0) < NORM_ATOL

    @staticmethod
    def from_terms(n: int, terms: dict[str, complex], normalize: bool = False) -> "Ket":
        amps = np.zeros(2**n, dtype=np.complex128)
        for bits, value in terms.items():
            assert len(bits) == n
            amps[bitstring_to_index(bits)] += value
        if normalize:
            amps = amps / np.linalg.norm(amps)
        return Ket(n, amps)

    @staticmethod
    def basis(n: int, bits: str) -> "Ket":
        return Ket.from_terms(n, {bits: 1.0})


def inner(a: Ket, b: Ket) -> complex:
    """⟨a|b⟩, conjugate-linear in the first argument."""
    if a.n != b.n:
        raise DimensionMismatch(f"qubit counts differ: {a.n} vs {b.n}")
    return complex(np.vdot(a.amps, b.amps))


def dicke(n: int, k: int) -> Ket:
    """Uniform superposition of all weight-k basis strings of n qubits."""
    if not 0 <= k <= n:
        raise ValueError(f"Hamming weight {k} out of range for {n} qubits")
    amps = np.zeros(2**n, dtype=np.complex128)
    idx = np.arange(2**n, dtype=np.uint64)
    amps[np.bitwise_count(idx) == k] = 1.0 / np.sqrt(comb(n, k))
    return Ket(n, amps)
