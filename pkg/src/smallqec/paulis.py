"""Pauli strings and their dense-vector action.

A Pauli acts on amplitude vectors through a bit-flip permutation plus a phase
vector; no 2^n x 2^n matrix is ever formed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator

import numpy as np

from .states import DimensionMismatch, Ket

LETTERS = "IXYZ"


@dataclass(frozen=True)
class PauliString:
    symbols: tuple[str, ...]

    def __post_init__(self):
        assert all(s in LETTERS for s in self.symbols)

    @staticmethod
    def from_text(text: str) -> "PauliString":
        return PauliString(tuple(text))

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def weight(self) -> int:
        return sum(s != "I" for s in self.symbols)

    @property
    def text(self) -> str:
        return "".join(self.symbols)

    def masks(self) -> tuple[int, int, int]:
        """(x_mask, zy_mask, n_y): flip bits, phase bits, and Y count."""
        x = zy = ny = 0
        n = self.n
        for pos, s in enumerate(self.symbols):
            bit = 1 << (n - 1 - pos)
            if s in "XY":
                x |= bit
            if s in "ZY":
                zy |= bit
            ny += s == "Y"
        return x, zy, ny

    def __str__(self) -> str:
        return self.text


def pauli_phase_vector(n: int, zy_mask: int, ny: int) -> np.ndarray:
    """Phase picked up by each input basis state |s⟩ under the Pauli action."""
    idx = np.arange(2**n, dtype=np.uint64)
    parity = np.bitwise_count(idx & np.uint64(zy_mask)) & np.uint64(1)
    return (1j**ny) * (1.0 - 2.0 * parity.astype(np.float64))


def apply_pauli_to_vector(amps: np.ndarray, n: int, p: PauliString) -> np.ndarray:
    x, zy, ny = p.masks()
    out = pauli_phase_vector(n, zy, ny) * amps
    if x:
        out = out[np.arange(2**n) ^ x]
    return out


def apply_pauli(state: Ket, p: PauliString) -> Ket:
    if p.n != state.n:
        raise DimensionMismatch(f"Pauli on {p.n} qubits, state on {state.n}")
    return Ket(state.n, apply_pauli_to_vector(state.amps, state.n, p))


def enumerate_paulis(n: int, w: int) -> Iterator[PauliString]:
    """All weight-w Pauli strings, lexicographic in (positions, letters X<Y<Z)."""
    assert 0 <= w <= n
    for positions in itertools.combinations(range(n), w):
        for letters in itertools.product("XYZ", repeat=w):
            symbols = ["I"] * n
            for pos, letter in zip(positions, letters):
                symbols[pos] = letter
            yield PauliString(tuple(symbols))


def count_paulis(n: int, w: int) -> int:
    return comb(n, w) * 3**w


def paulis_up_to_weight(n: int, max_w: int, include_identity: bool = False) -> list[PauliString]:
    lo = 0 if include_identity else 1
    return [p for w in range(lo, max_w + 1) for p in enumerate_paulis(n, w)]
