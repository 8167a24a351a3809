"""Single-qubit gates: Pauli/Clifford basics, hatted SU(2) forms, and the
F / Phi / R(p,q) rotations that generate the exceptional SU(2) subgroups.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

UNITARY_ATOL = 1e-9

I2 = np.eye(2, dtype=np.complex128)
X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)
S = np.array([[1, 0], [0, 1j]], dtype=np.complex128)

GOLDEN = (np.sqrt(5) + 1) / 2
GOLDEN_B = (np.sqrt(5) - 1) / 2

PHI = 0.5 * np.array([[GOLDEN + 1j * GOLDEN_B, 1], [-1, GOLDEN - 1j * GOLDEN_B]])
PHI_STAR = 0.5 * np.array([[-GOLDEN_B + 1j * GOLDEN, 1], [-1, -GOLDEN_B - 1j * GOLDEN]])


class UnknownGate(ValueError):
    pass


def zrot(theta: float) -> np.ndarray:
    """Z(theta) = diag(e^{-i theta/2}, e^{i theta/2})."""
    return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]])


def yrot(theta: float) -> np.ndarray:
    """Y(theta) = exp(-i theta Y / 2)."""
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


XHAT = -1j * X
YHAT = -1j * Y
ZHAT = -1j * Z
HHAT = -1j * H
SHAT = zrot(np.pi / 2)
F = HHAT @ zrot(-np.pi / 2)


def r_rotation(p: int, q: int) -> np.ndarray:
    """Order-10 rotation about a (Y,Z)-plane axis: requires p^2 + q^2 = 5."""
    if p not in (-2, -1, 1, 2) or q not in (-2, -1, 1, 2) or p * p + q * q != 5:
        raise UnknownGate(f"invalid R axis (p, q) = ({p}, {q})")
    return np.cos(np.pi / 5) * I2 + 1j * np.sin(np.pi / 5) / np.sqrt(5) * (p * Y + q * Z)


def is_unitary(u: np.ndarray, atol: float = UNITARY_ATOL) -> bool:
    u = np.asarray(u)
    return u.shape == (2, 2) and np.allclose(u.conj().T @ u, I2, atol=atol)


def is_su2(u: np.ndarray, atol: float = UNITARY_ATOL) -> bool:
    return is_unitary(u, atol) and abs(np.linalg.det(u) - 1) < atol


@dataclass(frozen=True)
class Su2Element:
    """A 2x2 unitary with determinant 1."""

    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=np.complex128)
        if not is_su2(entries):
            raise ValueError("matrix is not in SU(2) within tolerance")
        object.__setattr__(self, "entries", entries)
        self.entries.setflags(write=False)


_NAMED_SU2 = {
    "i": lambda: I2,
    "xhat": lambda: XHAT,
    "yhat": lambda: YHAT,
    "zhat": lambda: ZHAT,
    "hhat": lambda: HHAT,
    "shat": lambda: SHAT,
    "f": lambda: F,
    "fstar": lambda: F.conj(),
    "phi": lambda: PHI,
    "phistar": lambda: PHI_STAR,
}


def named_gate(name: str, *args: float) -> Su2Element:
    """Determinant-1 gate by name: xhat/yhat/zhat/hhat/shat, f, phi, phistar,
    z(theta), r(p, q)."""
    key = name.lower().replace("-", "").replace("_", "")
    if key in _NAMED_SU2:
        if args:
            raise UnknownGate(f"{name} takes no arguments")
        return Su2Element(_NAMED_SU2[key]())
    if key in ("z", "zrot"):
        (theta,) = args
        return Su2Element(zrot(theta))
    if key in ("r", "rpq"):
        p, q = args
        return Su2Element(r_rotation(int(p), int(q)))
    raise UnknownGate(f"unknown gate name {name!r}")


def rescale_to_su2(u: np.ndarray) -> tuple[np.ndarray, complex]:
    """Divide a 2x2 unitary by a square root of its determinant.

    Returns (su2 matrix, removed phase factor); the sign branch is the
    principal square root.
    """
    u = np.asarray(u, dtype=np.complex128)
    det = np.linalg.det(u)
    phase = np.sqrt(det + 0j)
    return u / phase, complex(phase)
