"""Tensor-product layers of single-qubit unitaries."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gates import is_unitary
from .states import DimensionMismatch, Ket


@dataclass(frozen=True)
class LocalUnitaryLayer:
    """U_1 ⊗ ... ⊗ U_n with each factor a 2x2 unitary (not necessarily det 1)."""

    factors: tuple[np.ndarray, ...]

    def __post_init__(self):
        factors = tuple(np.asarray(u, dtype=np.complex128) for u in self.factors)
        for u in factors:
            if not is_unitary(u):
                raise ValueError("layer factor is not unitary within tolerance")
        object.__setattr__(self, "factors", factors)

    @property
    def n(self) -> int:
        return len(self.factors)

    @staticmethod
    def identity(n: int) -> "LocalUnitaryLayer":
        return LocalUnitaryLayer(tuple(np.eye(2) for _ in range(n)))

    @staticmethod
    def uniform(u: np.ndarray, n: int) -> "LocalUnitaryLayer":
        return LocalUnitaryLayer(tuple(u for _ in range(n)))

    def compose(self, other: "LocalUnitaryLayer") -> "LocalUnitaryLayer":
        """Factor-wise product: (self ∘ other) applies ``other`` first."""
        assert self.n == other.n
        return LocalUnitaryLayer(tuple(a @ b for a, b in zip(self.factors, other.factors)))


def apply_layer_to_vector(amps: np.ndarray, n: int, layer: LocalUnitaryLayer) -> np.ndarray:
    """n sweeps of 2x2 multiplication; qubit 1 is tensor axis 0."""
    t = amps.reshape((2,) * n)
    for axis, u in enumerate(layer.factors):
        t = np.moveaxis(np.tensordot(u, t, axes=([1], [axis])), 0, axis)
    return np.ascontiguousarray(t).reshape(-1)


def apply_layer(state: Ket, layer: LocalUnitaryLayer) -> Ket:
    if layer.n != state.n:
        raise DimensionMismatch(f"layer on {layer.n} qubits, state on {state.n}")
    return Ket(state.n, apply_layer_to_vector(state.amps, state.n, layer))
