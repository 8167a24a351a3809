"""Everything computed about a fixed code subspace: Knill-Laflamme matrices
and residuals, distance, weight enumerators, signature norm, degeneracy rank,
and the logical action of a transversal layer.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .layers import LocalUnitaryLayer, apply_layer_to_vector
from .paulis import PauliString, enumerate_paulis, pauli_phase_vector
from .states import DimensionMismatch, Ket

ORTHO_ATOL = 1e-9
DETECT_TOL = 1e-9
RANK_THRESHOLD = 1e-8


class KLViolated(ValueError):
    pass


@dataclass(frozen=True)
class CodeSubspace:
    """K orthonormal codewords on n qubits, stored as rows of ``vectors``."""

    n: int
    vectors: np.ndarray

    def __post_init__(self):
        vectors = np.asarray(self.vectors, dtype=np.complex128)
        assert vectors.ndim == 2 and vectors.shape[1] == 2**self.n
        gram = vectors.conj() @ vectors.T
        if not np.allclose(gram, np.eye(vectors.shape[0]), atol=ORTHO_ATOL):
            raise ValueError("codewords are not orthonormal within tolerance")
        object.__setattr__(self, "vectors", vectors)
        self.vectors.setflags(write=False)

    @property
    def K(self) -> int:
        return self.vectors.shape[0]

    @property
    def basis(self) -> list[Ket]:
        return [Ket(self.n, v) for v in self.vectors]

    @staticmethod
    def from_kets(kets: list[Ket]) -> "CodeSubspace":
        return CodeSubspace(kets[0].n, np.stack([k.amps for k in kets]))

    def projector(self) -> np.ndarray:
        return self.vectors.T @ self.vectors.conj()


def kl_matrix(code: CodeSubspace, e: PauliString) -> np.ndarray:
    """Matrix of ⟨psi_i| E |psi_j⟩ over the code basis."""
    if e.n != code.n:
        raise DimensionMismatch(f"Pauli on {e.n} qubits, code on {code.n}")
    return _kl_matrix_fast(code.vectors, code.n, *e.masks())


def _kl_matrix_fast(vectors: np.ndarray, n: int, x: int, zy: int, ny: int) -> np.ndarray:
    moved = pauli_phase_vector(n, zy, ny) * vectors
    if x:
        moved = moved[:, np.arange(2**n) ^ x]
    return vectors.conj() @ moved.T


def kl_matrices(code: CodeSubspace, errors) -> list[np.ndarray]:
    return [kl_matrix(code, e) for e in errors]


def kl_residual(code: CodeSubspace, errors) -> float:
    """Sum over errors of off-diagonal weight plus squared diagonal spread.

    Zero (within tolerance) iff every error in the set is detectable.
    """
    total = 0.0
    for e in errors:
        m = kl_matrix(code, e)
        diag = np.diag(m)
        off = m - np.diag(diag)
        total += float(np.sum(np.abs(off) ** 2))
        spread = diag[:, None] - diag[None, :]
        total += float(np.sum(np.abs(spread) ** 2))
    return total


def detection_defect(m: np.ndarray) -> float:
    """Largest entrywise deviation of a KL matrix from lambda * identity."""
    k = m.shape[0]
    lam = np.trace(m) / k
    return float(np.abs(m - lam * np.eye(k)).max())


@dataclass(frozen=True)
class AtLeast:
    """Distance lower bound: no violation found up to the swept weight."""

    bound: int

    def __int__(self) -> int:
        return self.bound


def distance(code: CodeSubspace, max_w: int, tol: float = DETECT_TOL):
    """Smallest weight with an undetectable Pauli; AtLeast(max_w + 1) if none.

    For K = 1 every error is detectable, so the result is always AtLeast.
    Returns (value, witness) where witness is the first violating Pauli.
    """
    assert max_w <= code.n
    if code.K > 1:
        for w in range(1, max_w + 1):
            for e in enumerate_paulis(code.n, w):
                if detection_defect(kl_matrix(code, e)) > tol:
                    return w, e
    return AtLeast(max_w + 1), None


@dataclass(frozen=True)
class EnumeratorPair:
    A: np.ndarray
    B: np.ndarray


def enumerators(code: CodeSubspace) -> EnumeratorPair:
    """Shor-Laflamme weight distributions A_j, B_j, streamed weight by weight."""
    n, K = code.n, code.K
    vectors = code.vectors
    A = np.zeros(n + 1)
    B = np.zeros(n + 1)
    for w in range(n + 1):
        for e in enumerate_paulis(n, w):
            m = _kl_matrix_fast(vectors, n, *e.masks())
            A[w] += abs(np.trace(m)) ** 2
            B[w] += float(np.sum(np.abs(m) ** 2))
    return EnumeratorPair(A / K**2, B / K)


def signature(code: CodeSubspace, d: int) -> tuple[np.ndarray, float]:
    """Per-error lambda_E over weights 1..d-1 and the Euclidean norm lambda*."""
    assert d >= 1
    values = []
    for w in range(1, d):
        for e in enumerate_paulis(code.n, w):
            values.append(np.trace(kl_matrix(code, e)) / code.K)
    vec = np.array(values, dtype=np.complex128)
    return vec, float(np.linalg.norm(vec))


@dataclass
class KlReport:
    error_set: str
    matrices: list[np.ndarray]
    max_off_diagonal: float
    max_diagonal_spread: float
    lambda_vector: np.ndarray
    lambda_star: float
    residual: float = field(default=0.0)


def kl_report(code: CodeSubspace, errors) -> KlReport:
    errors = list(errors)
    mats = kl_matrices(code, errors)
    max_off = 0.0
    max_spread = 0.0
    residual = 0.0
    lams = []
    for m in mats:
        diag = np.diag(m)
        off = m - np.diag(diag)
        spread = diag[:, None] - diag[None, :]
        max_off = max(max_off, float(np.abs(off).max(initial=0.0)))
        max_spread = max(max_spread, float(np.abs(spread).max(initial=0.0)))
        residual += float(np.sum(np.abs(off) ** 2) + np.sum(np.abs(spread) ** 2))
        lams.append(np.trace(m) / code.K)
    lam_vec = np.array(lams, dtype=np.complex128)
    weights = sorted({e.weight for e in errors})
    return KlReport(
        error_set=f"weights {weights}",
        matrices=mats,
        max_off_diagonal=max_off,
        max_diagonal_spread=max_spread,
        lambda_vector=lam_vec,
        lambda_star=float(np.linalg.norm(lam_vec)),
        residual=residual,
    )


def degeneracy_rank(code: CodeSubspace, errors, tol: float = DETECT_TOL) -> int:
    """Rank of the (lambda_ij) matrix over the given correctable error set.

    Requires every product E_i† E_j to be detectable; the identity is used
    when the set is empty.
    """
    from .paulis import PauliString as PS

    errors = list(errors) or [PS.from_text("I" * code.n)]
    moved = []
    for e in errors:
        x, zy, ny = e.masks()
        m = pauli_phase_vector(code.n, zy, ny) * code.vectors
        if x:
            m = m[:, np.arange(2**code.n) ^ x]
        moved.append(m)
    k = len(errors)
    lam = np.zeros((k, k), dtype=np.complex128)
    for i in range(k):
        for j in range(k):
            prod = moved[i].conj() @ moved[j].T
            if detection_defect(prod) > tol:
                raise KLViolated(
                    f"product {errors[i]}† {errors[j]} is not detectable"
                )
            lam[i, j] = np.trace(prod) / code.K
    sv = np.linalg.svd(lam, compute_uv=False)
    return int(np.sum(sv > RANK_THRESHOLD))


def logical_action(code: CodeSubspace, layer: LocalUnitaryLayer) -> tuple[np.ndarray, float]:
    """Matrix of the layer over the code basis plus worst-case leakage norm."""
    if layer.n != code.n:
        raise DimensionMismatch(f"layer on {layer.n} qubits, code on {code.n}")
    moved = np.stack(
        [apply_layer_to_vector(v, code.n, layer) for v in code.vectors]
    )
    m = code.vectors.conj() @ moved.T
    residual = moved.T - code.vectors.T @ m
    leakage = float(np.linalg.norm(residual, axis=0).max())
    return m, leakage
