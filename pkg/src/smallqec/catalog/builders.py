"""Constructors that turn registry data into codeword arrays.

Most entries are plain superposition tables ("words"); structured families
(ancilla extension, SO(5) parametrization, cyclic orbits, root- or
LP-constrained amplitude systems) get dedicated builders.
"""
from __future__ import annotations

import numpy as np

from .. import gates
from ..states import bitstring_to_index
from .exprs import ExprError, evaluate


class ConstraintResidual(ValueError):
    def __init__(self, check: str, value: float):
        super().__init__(f"constraint {check!r} violated, residual {value:.3e}")
        self.check = check
        self.value = value


def _vector_from_words(n: int, words, env: dict, prefactor: str = "1") -> np.ndarray:
    amps = np.zeros(2**n, dtype=np.complex128)
    scale = evaluate(prefactor, env)
    for bits, expr in words:
        assert len(bits) == n, f"{bits!r} is not an {n}-bit string"
        amps[bitstring_to_index(bits)] += scale * evaluate(expr, env)
    return amps


def _complement_perm(n: int, flip_bits: int | None = None) -> np.ndarray:
    mask = (2**n - 1) if flip_bits is None else flip_bits
    return np.arange(2**n) ^ mask


def _apply_ket1_rule(n: int, ket0: np.ndarray, rule) -> np.ndarray:
    if rule == "xbar":
        return ket0[_complement_perm(n)]
    if rule == "xbar5":
        flip = ((1 << 5) - 1) << (n - 5)
        return ket0[_complement_perm(n, flip)]
    raise ValueError(f"unknown ket1 rule {rule!r}")


def build_words(spec: dict, env: dict) -> np.ndarray:
    """Superposition table: explicit (bitstring, amplitude-expression) pairs."""
    n = spec["n"]
    ket0 = _vector_from_words(n, spec["ket0"], env, spec.get("prefactor", "1"))
    rule = spec["ket1"]
    if isinstance(rule, str):
        ket1 = _apply_ket1_rule(n, ket0, rule)
    else:
        ket1 = _vector_from_words(n, rule, env, spec.get("prefactor", "1"))
    return np.stack([ket0, ket1])


def build_sbasis(spec: dict, env: dict) -> np.ndarray:
    """Code given as coefficients over a small orthonormal auxiliary basis."""
    n = spec["n"]
    rows = np.stack([_vector_from_words(n, words, env) for words in spec["sbasis"]])
    coeffs = np.array([evaluate(e, env) for e in spec["coeffs"]])
    ket0 = coeffs @ rows
    ket1 = _apply_ket1_rule(n, ket0, spec["ket1"])
    return np.stack([ket0, ket1])


# ---------------------------------------------------------------------------
# ((6,2,3)) built from the ((5,2,3)) code by an ancilla plus two-qubit gate

FIVE23_KET0 = [
    ("00000", "1"), ("00011", "-1"), ("00101", "1"), ("00110", "-1"),
    ("01001", "1"), ("01010", "1"), ("01100", "-1"), ("01111", "-1"),
    ("10001", "-1"), ("10010", "1"), ("10100", "1"), ("10111", "-1"),
    ("11000", "-1"), ("11011", "-1"), ("11101", "-1"), ("11110", "-1"),
]
FIVE23_KET1 = [
    ("00001", "1"), ("00010", "1"), ("00100", "1"), ("00111", "1"),
    ("01000", "1"), ("01011", "-1"), ("01101", "-1"), ("01110", "1"),
    ("10000", "1"), ("10011", "1"), ("10101", "-1"), ("10110", "-1"),
    ("11001", "1"), ("11010", "-1"), ("11100", "1"), ("11111", "-1"),
]


def five23_vectors() -> np.ndarray:
    ket0 = _vector_from_words(5, FIVE23_KET0, {}, "1/4")
    ket1 = _vector_from_words(5, FIVE23_KET1, {}, "1/4")
    return np.stack([ket0, ket1])


def _two_qubit_gate_from523(variant: str, theta: float) -> np.ndarray:
    # the reflection axis must conjugate Z(4*pi/3) onto (a phase times) YHS;
    # its printed form (X+Y instead of X-Y) does not, so one sign is fixed here
    cz_like = np.diag([1, 1, 1, -1]).astype(np.complex128)
    if variant == "bd4":
        left = gates.I2
    else:
        left = np.sqrt((3 - np.sqrt(3)) / 12) * (gates.X - gates.Y) - np.sqrt(
            (3 + np.sqrt(3)) / 6
        ) * gates.Z
    return cz_like @ np.kron(left, gates.yrot(theta))


def build_from523(spec: dict, env: dict) -> np.ndarray:
    """Append a |0⟩ ancilla to the ((5,2,3)) code and rotate the last two
    qubits by the variant's two-qubit gate."""
    theta = env["theta"]
    u = _two_qubit_gate_from523(spec["variant"], theta)
    out = []
    for ket5 in five23_vectors():
        ket6 = np.zeros(64, dtype=np.complex128)
        ket6[0::2] = ket5  # ancilla |0⟩ on qubit 6
        out.append((ket6.reshape(16, 4) @ u.T).reshape(-1))
    return np.stack(out)


# ---------------------------------------------------------------------------
# ((6,2,3)) SO(5) family

_SO5_PAIRS = [("00001", "11110"), ("00010", "11101"), ("00100", "11011"),
              ("01000", "10111"), ("10000", "01111")]

SO5_ORTHO_TOL = 1e-9


def _so5_matrix(variant: str, env: dict) -> np.ndarray:
    if variant == "bd4":
        w15, w25 = env["w15"], env["w25"]
        w = np.array([
            [-w25 / 2, w25 / 2, -w25 / 2, w25 / 2, w15],
            [w15 / 2, -w15 / 2, w15 / 2, -w15 / 2, w25],
            [1 / 2, 1 / 2, 1 / 2, 1 / 2, 0],
            [1 / 2, -1 / 2, -1 / 2, 1 / 2, 0],
            [1 / 2, 1 / 2, -1 / 2, -1 / 2, 0],
        ])
    elif variant == "c4":
        w15, w25, w35 = env["w15"], env["w25"], env["w35"]
        if abs(w15) < 1e-12 or abs(w35) < 1e-12:
            raise ConstraintResidual("c4 needs w15 != 0 and w35 != 0", 0.0)
        r = np.sqrt(w35 * w35 + 1)
        gamma = np.arccos(w35 / r)
        delta = np.arctan(w25 / w15)
        alpha, beta = gamma + delta, -gamma + delta
        w11, w21 = r / 2 * np.cos(alpha), r / 2 * np.sin(alpha)
        w12, w22 = r / 2 * np.cos(beta), r / 2 * np.sin(beta)
        w31 = -(w11 * w15 + w21 * w25) / w35
        w = np.array([
            [w11, w12, w11, w12, w15],
            [w21, w22, w21, w22, w25],
            [w31, w31, w31, w31, w35],
            [1 / 2, -1 / 2, -1 / 2, 1 / 2, 0],
            [1 / 2, 1 / 2, -1 / 2, -1 / 2, 0],
        ])
        # printed shape lands in O(5) \ SO(5); negating one ss-component row
        # restores det +1 without touching column five
        if np.linalg.det(w) < 0:
            w[3] = -w[3]
    else:  # generic column-five vector, remaining columns by Gram-Schmidt
        col5 = np.asarray(env["col5"], dtype=np.float64)
        col5 = col5 / np.linalg.norm(col5)
        cols = [col5]
        for k in range(5):
            cand = np.eye(5)[k]
            for c in cols:
                cand = cand - (c @ cand) * c
            norm = np.linalg.norm(cand)
            if norm > 1e-8:
                cols.append(cand / norm)
            if len(cols) == 5:
                break
        w = np.stack(cols[1:] + [cols[0]], axis=1)
        if np.linalg.det(w) < 0:
            w[:, 0] = -w[:, 0]
    ortho = float(np.abs(w.T @ w - np.eye(5)).max())
    if ortho > SO5_ORTHO_TOL:
        raise ConstraintResidual("W orthogonality", ortho)
    det = float(np.linalg.det(w))
    if abs(det - 1) > 1e-8:
        raise ConstraintResidual("det W = +1", abs(det - 1))
    return w


def build_so5(spec: dict, env: dict) -> np.ndarray:
    w = _so5_matrix(spec["variant"], env)
    s_states = np.zeros((5, 32), dtype=np.complex128)
    for j, (lo, hi) in enumerate(_SO5_PAIRS):
        s_states[j, [bitstring_to_index(lo), bitstring_to_index(hi)]] = 1 / np.sqrt(2)
    ket0 = np.zeros(64, dtype=np.complex128)
    ket1 = np.zeros(64, dtype=np.complex128)
    for j in range(5):
        ket0[:32] += 0.5 * (w[j, 0] + 1j * w[j, 1]) * s_states[j]
        ket0[32:] += 0.5 * (w[j, 2] + 1j * w[j, 3]) * s_states[j]
        ket1[:32] += 0.5 * (w[j, 2] - 1j * w[j, 3]) * s_states[j]
        ket1[32:] += 0.5 * (1j * w[j, 1] - w[j, 0]) * s_states[j]
    return np.stack([ket0, ket1])


def so5_line_parameter(spec: dict, env: dict) -> float:
    """a = sum_j W_{j5}^4: the only invariant the enumerator row depends on."""
    return float(np.sum(_so5_matrix(spec["variant"], env)[:, 4] ** 4))


# ---------------------------------------------------------------------------
# ((7,2,3)) cyclic family

_CYCLIC_W2 = ["0000011", "0000101", "0001001"]
_CYCLIC_W3 = "0010111"
_CYCLIC_W4 = ["0001111", "0011011", "0011101", "0101011"]
_CYCLIC_W6 = "0111111"


def _orbit_vector(bits: str) -> np.ndarray:
    """Normalized sum over the 7 cyclic shifts of a bit string."""
    v = np.zeros(128, dtype=np.complex128)
    s = bitstring_to_index(bits)
    for _ in range(7):
        v[s] += 1.0
        s = ((s << 1) | (s >> 6)) & 127
    return v / np.linalg.norm(v)


def cyclic_coefficients(lam: float, s0: int, s1: int) -> tuple[float, float, float, float]:
    if not 0 <= lam <= np.sqrt(7) + 1e-12:
        raise ConstraintResidual("lambda* in [0, sqrt(7)]", lam)
    s7 = np.sqrt(7)
    c0 = np.sqrt(s7 * lam + 8) / 8
    c1 = s0 * np.sqrt(s7 * lam) / 4
    c3 = 0.4 * (s7 * c0 + s1 * np.sqrt(max(7 * c0 * c0 - 15 * s7 * lam / 64, 0.0)))
    c2 = -2 * c3 + s7 * c0
    return c0, c1, c2, c3


def build_cyclic(spec: dict, env: dict) -> np.ndarray:
    c0, c1, c2, c3 = cyclic_coefficients(env["lam"], env["s0"], env["s1"])
    ket0 = c0 * np.eye(128, dtype=np.complex128)[0]
    w2 = sum(_orbit_vector(b) for b in _CYCLIC_W2)
    ket0 += c1 / (2 * np.sqrt(3)) * (w2 - 3 * _orbit_vector(_CYCLIC_W6))
    ket0 += c2 * _orbit_vector(_CYCLIC_W3)
    ket0 += c3 / 2 * sum(_orbit_vector(b) for b in _CYCLIC_W4)
    return np.stack([ket0, ket0[_complement_perm(7)]])


# ---------------------------------------------------------------------------
# BD18 type I: free squared amplitudes under row/column sum constraints

BD18I_WORDS = [
    "0111001", "0111010", "0111100", "1011001", "1011010", "1011100",
    "1101001", "1101010", "1101100", "1110001", "1110010", "1110100",
]


def build_bd18i(spec: dict, env: dict) -> np.ndarray:
    tsq = np.asarray(env["tsq"], dtype=np.float64)
    signs = np.asarray(env["signs"], dtype=np.float64)
    assert tsq.shape == (12,) and signs.shape == (12,)
    if tsq.min() < -1e-12:
        raise ConstraintResidual("tsq >= 0", float(tsq.min()))
    for g in range(4):
        r = float(abs(tsq[3 * g : 3 * g + 3].sum() - 1 / 6))
        if r > 1e-9:
            raise ConstraintResidual(f"row sum {g}", r)
    for c in range(2):
        r = float(abs(tsq[c::3].sum() - 2 / 9))
        if r > 1e-9:
            raise ConstraintResidual(f"column sum {c}", r)
    ket0 = np.zeros(128, dtype=np.complex128)
    ket0[0] = 1j * np.sqrt(1 / 18)
    ket0[bitstring_to_index("0000111")] = env["pm"] * 1j * np.sqrt(5 / 18)
    for word, t2, s in zip(BD18I_WORDS, tsq, signs):
        ket0[bitstring_to_index(word)] = s * np.sqrt(max(t2, 0.0))
    return np.stack([ket0, ket0[_complement_perm(7)]])


# ---------------------------------------------------------------------------
# BD18 type II: amplitude fixed by a polynomial root

BD18II_PRINTED_ROOTS = (0.094956415409, 0.230377064)


def bd18ii_root(index: int) -> float:
    """Root of 3222 b^2 - 49329 b^4 - 58320 b^6 + 209952 b^8 = 25 in (0, 1/3),
    found by bisection and cross-checked against the printed decimals."""

    def f(b):
        b2 = b * b
        return 3222 * b2 - 49329 * b2**2 - 58320 * b2**3 + 209952 * b2**4 - 25

    grid = np.linspace(1e-6, 1 / 3, 2000)
    vals = np.array([f(b) for b in grid])
    brackets = [
        (grid[k], grid[k + 1])
        for k in range(len(grid) - 1)
        if vals[k] == 0 or (vals[k] < 0) != (vals[k + 1] < 0)
    ]
    assert len(brackets) == 2, "expected exactly two roots in (0, 1/3)"
    lo, hi = brackets[index]
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if (f(lo) < 0) == (f(mid) < 0):
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    printed = BD18II_PRINTED_ROOTS[index]
    if abs(root - printed) > 1e-8:
        raise ConstraintResidual("root vs printed decimal", abs(root - printed))
    return root


def build_bd18ii(spec: dict, env: dict) -> np.ndarray:
    b = bd18ii_root(env["root"])
    d = 1 / np.sqrt(36 * b * b + 14)
    env = dict(env, b=b, d=d)
    words = [
        ("0000000", "exp(i*theta)/sqrt(18)"),
        ("0111010", "b*s1"),
        ("0111100", "s2*sqrt(1/18 - b**2)"),
        ("1011010", "s3*d"),
        ("1100011", "-s1*s2*s3*sqrt(1/9 - b**2)"),
        ("1100101", "-s3*sqrt(b**2 + d**2 + 1/18)"),
        ("1010110", "s4*sqrt(1/6 - d**2)"),
        ("1101001", "s4*sqrt(1/6 - d**2)"),
        ("0110110", "s1*s3*s4*sqrt(2/18)"),
        ("0001110", "-s1*s3*s4*i*sqrt(2/18)"),
        ("0011001", "s1*s3*s4*i*sqrt(3/18)"),
    ]
    ket0 = _vector_from_words(7, words, env)
    return np.stack([ket0, ket0[_complement_perm(7)]])


def bd18ii_lambda_star2(root: int, s: tuple[int, int, int, int]) -> float:
    b = bd18ii_root(root)
    d = 1 / np.sqrt(36 * b * b + 14)
    b2, d2 = b * b, d * d
    s_ = np.sqrt
    return float(
        -257 / 6
        + 4 / 9 * (6 * d2 - 1) * d * s_(36 * b2 + 36 * d2 + 2)
        + 112 * b2
        - 8 * s_((162 * b2**2 - 27 * b2 + 1) * (1 - 6 * d2)) / (27 * s_(3))
        + 462 * d2**2
        + 1802 * d2 / 3
        + 8 / 27 * b * (
            -s_(6) * s_(9 * b2 - 54 * d2**2 + 27 * d2 - 1)
            + s_((162 * b2**2 - 27 * b2 + 1) * (18 * b2 + 18 * d2 + 1))
            + 6 * d * s_(6 - 36 * d2)
        )
    )


# ---------------------------------------------------------------------------
# ((8,2,3)) BD38: sixteen squared amplitudes under a printed linear system

BD38_WORDS = [
    "00000000", "00000000", "00100011", "00101110", "00110110", "01000011",
    "01001110", "01010110", "01101001", "01110001", "01111100", "10011001",
    "10100101", "11000101", "11101010", "11110010",
]

BD38_C = np.array([
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1],
    [1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, 1, 1, -1, -1, -1],
    [1, 1, -1, -1, -1, 1, 1, 1, -1, -1, -1, 1, -1, 1, -1, -1],
    [1, 1, 1, 1, -1, 1, 1, -1, 1, -1, -1, -1, 1, 1, 1, -1],
    [1, 1, 1, -1, 1, 1, -1, 1, -1, 1, -1, -1, 1, 1, -1, 1],
    [1, 1, 1, -1, -1, 1, -1, -1, 1, 1, -1, 1, -1, -1, 1, 1],
    [1, 1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1, -1, -1],
    [1, 1, -1, 1, 1, -1, 1, 1, -1, -1, 1, -1, -1, -1, 1, 1],
], dtype=np.float64)


def bd38_default_squares() -> np.ndarray:
    """Minimum-norm solution of the printed linear system plus normalization;
    deterministic, strictly positive, and verified against the forced values."""
    a = np.vstack([BD38_C, np.ones(16)])
    rhs = np.concatenate([np.zeros(8), [1.0]])
    x, *_ = np.linalg.lstsq(a, rhs, rcond=None)
    if x.min() < 1e-6:
        raise ConstraintResidual("default interior point positivity", float(x.min()))
    return x


def build_bd38(spec: dict, env: dict) -> np.ndarray:
    x = np.asarray(env["x"], dtype=np.float64) if env.get("x") is not None else bd38_default_squares()
    assert x.shape == (16,)
    if x.min() < -1e-12:
        raise ConstraintResidual("x >= 0", float(x.min()))
    resid = float(np.abs(BD38_C @ x).max())
    if resid > 1e-9:
        raise ConstraintResidual("C x = 0", resid)
    norm = float(abs(x.sum() - 1))
    if norm > 1e-9:
        raise ConstraintResidual("sum x = 1", norm)
    forced = max(abs(x[0] + x[1] - 1 / 38), abs(x[11] - 4 / 19))
    if forced > 1e-9:
        raise ConstraintResidual("forced values x1+x2 = 1/38, x12 = 4/19", forced)
    theta = np.sqrt(np.clip(x, 0, None))
    ket0 = np.zeros(256, dtype=np.complex128)
    ket0[0] = theta[0] + 1j * theta[1]
    for k in range(2, 8):
        ket0[bitstring_to_index(BD38_WORDS[k])] = 1j * theta[k]
    for k in range(8, 16):
        ket0[bitstring_to_index(BD38_WORDS[k])] = theta[k]
    return np.stack([ket0, ket0[_complement_perm(8)]])


BUILDERS = {
    "words": build_words,
    "sbasis": build_sbasis,
    "from523": build_from523,
    "so5": build_so5,
    "cyclic": build_cyclic,
    "bd18i": build_bd18i,
    "bd18ii": build_bd18ii,
    "bd38": build_bd38,
}
