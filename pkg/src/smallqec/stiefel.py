"""Gradient search over code subspaces and transversal layers.

Code bases live on the Stiefel manifold via the polar map
Theta (Theta† Theta)^(-1/2); single-qubit unitaries come from the exponential
map on su(2). Losses (KL residual, exact gate matching, signature-norm
penalty) are minimized with Adam over the unconstrained parameters; gradients
are automatic and are cross-checked against finite differences in the tests.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

import jax

jax.config.update("jax_enable_x64", True)

import jax.numpy as jnp  # noqa: E402

from .analysis import CodeSubspace  # noqa: E402
from .layers import LocalUnitaryLayer  # noqa: E402
from .paulis import paulis_up_to_weight  # noqa: E402

POLAR_EPS = 1e-12
RANK_TOL = 1e-10


class RankDeficient(ValueError):
    pass


# ---------------------------------------------------------------------------
# Parametrizations


def polar_retract(theta: np.ndarray) -> np.ndarray:
    """Map an m x K matrix to orthonormal columns: Theta (Theta†Theta)^(-1/2)."""
    theta = np.asarray(theta, dtype=np.complex128)
    if np.linalg.svd(theta, compute_uv=False).min() < RANK_TOL:
        raise RankDeficient("column rank too low for retraction")
    return np.asarray(_polar(jnp.asarray(theta)))


def su2_from_r3(r) -> np.ndarray:
    """exp(i (r1 X + r2 Y + r3 Z)); determinant 1 by construction."""
    return np.asarray(_su2(jnp.asarray(r, dtype=jnp.float64)))


def _polar(theta):
    k = theta.shape[1]
    gram = theta.conj().T @ theta + POLAR_EPS * jnp.eye(k)
    evals, evecs = jnp.linalg.eigh(gram)
    inv_sqrt = (evecs * (1.0 / jnp.sqrt(evals))) @ evecs.conj().T
    return theta @ inv_sqrt


def _su2(r):
    norm = jnp.linalg.norm(r)
    sinc = jnp.sinc(norm / jnp.pi)  # sin|r|/|r|, smooth at 0
    sx = jnp.array([[0.0, 1.0], [1.0, 0.0]], dtype=jnp.complex128)
    sy = jnp.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=jnp.complex128)
    sz = jnp.array([[1.0, 0.0], [0.0, -1.0]], dtype=jnp.complex128)
    h = r[0] * sx + r[1] * sy + r[2] * sz
    return jnp.cos(norm) * jnp.eye(2, dtype=jnp.complex128) + 1j * sinc * h


# ---------------------------------------------------------------------------
# Pauli action tables shared by the jax losses


def pauli_tables(n: int, max_w: int) -> tuple[np.ndarray, np.ndarray]:
    """(perms, phases): for error e, (E psi)[t] = phases[e, perm[e, t]] *
    psi[perm[e, t]]."""
    errors = paulis_up_to_weight(n, max_w)
    idx = np.arange(2**n)
    perms = np.empty((len(errors), 2**n), dtype=np.int64)
    phases = np.empty((len(errors), 2**n), dtype=np.complex128)
    from .paulis import pauli_phase_vector

    for row, e in enumerate(errors):
        x, zy, ny = e.masks()
        perms[row] = idx ^ x
        phases[row] = pauli_phase_vector(n, zy, ny)
    return perms, phases


def _kl_terms(psi, perms, phases):
    """Compressed matrices M[e] = psi† E_e psi for a column-orthonormal psi."""
    tmp = phases[:, :, None] * psi[None, :, :]  # (E, 2^n, K)
    moved = jnp.take_along_axis(tmp, perms[:, :, None], axis=1)
    return jnp.einsum("tk,etl->ekl", psi.conj(), moved)


def _kl_loss_from_terms(m):
    diag = jnp.diagonal(m, axis1=1, axis2=2)
    off = m - diag[:, :, None] * jnp.eye(m.shape[1])[None, :, :]
    spread = diag[:, :, None] - diag[:, None, :]
    return jnp.sum(jnp.abs(off) ** 2) + jnp.sum(jnp.abs(spread) ** 2)


def kl_loss_psi(psi, perms, phases):
    return _kl_loss_from_terms(_kl_terms(psi, perms, phases))


def signature_sq_psi(psi, perms, phases):
    diag = jnp.diagonal(_kl_terms(psi, perms, phases), axis1=1, axis2=2)
    lam = diag.mean(axis=1)
    return jnp.sum(jnp.abs(lam) ** 2)


def _apply_layer_psi(psi, factors, n):
    t = psi.T.reshape((-1,) + (2,) * n)  # (K, 2, ..., 2)
    for axis in range(n):
        t = jnp.moveaxis(jnp.tensordot(factors[axis], t, axes=([1], [axis + 1])),
                         0, axis + 1)
    return t.reshape(psi.shape[1], -1).T


def gate_loss_psi(psi, rs, targets, n):
    """Sum of |<psi_i| (⊗ U_s) |psi_j> - V_ij|^2 over targets; exact
    entrywise comparison including global phase."""
    total = 0.0
    for t, target in enumerate(targets):
        factors = [_su2(rs[t, s]) for s in range(n)]
        moved = _apply_layer_psi(psi, factors, n)
        m = psi.conj().T @ moved
        total = total + jnp.sum(jnp.abs(m - target) ** 2)
    return total


# ---------------------------------------------------------------------------
# Search configuration and driver


@dataclass
class Hyper:
    step: float = 0.01
    iters: int = 20000
    restarts: int = 20
    seed: int = 0
    check_every: int = 250
    stop_loss: float = 1e-13


@dataclass
class SearchConfig:
    n: int
    K: int = 2
    error_weight: int = 2
    targets: list = field(default_factory=list)  # 2x2 target logical unitaries
    lambda_star_target: float | None = None
    fixed_code: CodeSubspace | None = None
    threshold: float = 1e-6
    hyper: Hyper = field(default_factory=Hyper)

    def __post_init__(self):
        if self.fixed_code is not None and not self.targets:
            raise ValueError("fixed-code mode requires gate targets")


@dataclass
class SearchResult:
    code: CodeSubspace
    layers: list[LocalUnitaryLayer]
    final_loss: float
    loss_breakdown: dict
    iterations: int
    restart_index: int
    seed: int
    success: bool


def _adam_minimize(value_fn, x0, hyper: Hyper):
    """Adam on a flat real vector with a jitted fori-loop inner chunk."""
    grad_fn = jax.value_and_grad(value_fn)

    @jax.jit
    def chunk(carry, steps):
        def body(i, state):
            x, m, v, t = state
            _, g = grad_fn(x)
            t = t + 1
            m = 0.9 * m + 0.1 * g
            v = 0.999 * v + 0.001 * g * g
            mhat = m / (1 - 0.9**t)
            vhat = v / (1 - 0.999**t)
            x = x - hyper.step * mhat / (jnp.sqrt(vhat) + 1e-9)
            return x, m, v, t
        return jax.lax.fori_loop(0, steps, body, carry)

    x = jnp.asarray(x0)
    state = (x, jnp.zeros_like(x), jnp.zeros_like(x), jnp.array(0.0))
    done = 0
    loss = float(value_fn(x))
    while done < hyper.iters:
        steps = min(hyper.check_every, hyper.iters - done)
        state = chunk(state, steps)
        done += steps
        loss = float(value_fn(state[0]))
        if loss < hyper.stop_loss:
            break
    return np.asarray(state[0]), loss, done


def _split_params(x, dim, k, n_gate_params):
    ncx = dim * k
    theta = (x[:ncx] + 1j * x[ncx : 2 * ncx]).reshape(dim, k)
    rs = x[2 * ncx :].reshape(-1, n_gate_params, 3) if n_gate_params else None
    return theta, rs


def _total_loss_fn(config: SearchConfig, perms, phases):
    n, k = config.n, config.K
    dim = 2**n
    targets = [jnp.asarray(t, dtype=jnp.complex128) for t in config.targets]
    fixed_psi = None
    if config.fixed_code is not None:
        fixed_psi = jnp.asarray(config.fixed_code.vectors.T)
    lam_target = config.lambda_star_target

    def breakdown(x):
        if fixed_psi is None:
            theta, rs = _split_params(x, dim, k, n if targets else 0)
            psi = _polar(theta)
        else:
            psi = fixed_psi
            rs = x.reshape(-1, n, 3)
        parts = {}
        if fixed_psi is None:
            parts["kl"] = kl_loss_psi(psi, perms, phases)
            if lam_target is not None:
                est = signature_sq_psi(psi, perms, phases)
                parts["signature"] = (est - lam_target**2) ** 2
        if targets:
            parts["gate"] = gate_loss_psi(psi, rs, targets, n)
        return parts, psi, rs

    def total(x):
        parts, _, _ = breakdown(x)
        return sum(parts.values())

    return total, breakdown


def _initial_vector(config: SearchConfig, rng: np.random.Generator) -> np.ndarray:
    dim, k = 2**config.n, config.K
    pieces = []
    if config.fixed_code is None:
        pieces.append(rng.standard_normal(dim * k))
        pieces.append(rng.standard_normal(dim * k))
    if config.targets:
        pieces.append(rng.uniform(-np.pi, np.pi, size=len(config.targets) * config.n * 3))
    return np.concatenate(pieces)


def optimize(config: SearchConfig) -> SearchResult:
    """Restart loop over the enabled loss terms; returns the best restart.

    Non-convergence is reported through ``success=False``, never an error.
    """
    perms, phases = pauli_tables(config.n, config.error_weight)
    perms, phases = jnp.asarray(perms), jnp.asarray(phases)
    total, breakdown = _total_loss_fn(config, perms, phases)
    best = None
    for restart in range(config.hyper.restarts):
        rng = np.random.default_rng((config.hyper.seed, restart))
        x0 = _initial_vector(config, rng)
        x, loss, iters = _adam_minimize(total, x0, config.hyper)
        if best is None or loss < best[1]:
            best = (x, loss, iters, restart)
        if loss < config.hyper.stop_loss:
            break
    x, loss, iters, restart = best
    parts, psi, rs = breakdown(jnp.asarray(x))
    code = (config.fixed_code if config.fixed_code is not None
            else CodeSubspace(config.n, np.asarray(psi).T))
    layers = []
    if config.targets:
        for t in range(len(config.targets)):
            factors = tuple(su2_from_r3(np.asarray(rs)[t, s]) for s in range(config.n))
            layers.append(LocalUnitaryLayer(factors))
    return SearchResult(
        code=code,
        layers=layers,
        final_loss=float(loss),
        loss_breakdown={k: float(v) for k, v in parts.items()},
        iterations=iters,
        restart_index=restart,
        seed=config.hyper.seed,
        success=loss < config.threshold,
    )


# ---------------------------------------------------------------------------
# Fixed-code gate fitting
#
# With the code frozen the gate loss restricted to one factor is a real
# quadratic over the unit quaternion sphere (SU(2) exactly), so each factor
# has a closed-form global update. Alternating sweeps with many cheap
# restarts beat plain first-order descent on this loss by a wide margin.

_QUATERNION_BASIS = np.stack([
    np.eye(2, dtype=np.complex128),
    1j * np.array([[0, 1], [1, 0]], dtype=np.complex128),
    1j * np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    1j * np.array([[1, 0], [0, -1]], dtype=np.complex128),
])


def _sphere_min(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """argmin of w^T a w - 2 b^T w over the unit sphere (trust-region form)."""
    lam, q = np.linalg.eigh(a)
    beta = q.T @ b
    if np.linalg.norm(b) < 1e-14:
        return q[:, 0]

    def excess(mu):
        return float(np.sum((beta / (lam - mu)) ** 2) - 1.0)

    lo = lam[0] - max(1.0, 2 * np.linalg.norm(b))
    hi = lam[0] - 1e-14
    while excess(lo) > 0:
        lo = lam[0] - 2 * (lam[0] - lo)
    for _ in range(120):
        mid = 0.5 * (lo + hi)
        if excess(mid) > 0:
            hi = mid
        else:
            lo = mid
    w = q @ (beta / (lam - 0.5 * (lo + hi)))
    return w / np.linalg.norm(w)


def _apply_factor_np(tensor, u, axis):
    return np.moveaxis(np.tensordot(u, tensor, axes=([1], [axis + 1])), 0, axis + 1)


def _als_gate_fit(psi_tensor, target, n, rng, sweeps, abandon_after, abandon_loss):
    k = psi_tensor.shape[0]
    if rng is None:  # canonical first guess
        factors = [np.eye(2, dtype=np.complex128) for _ in range(n)]
    else:
        factors = []
        for _ in range(n):
            w = rng.standard_normal(4)
            factors.append(np.tensordot(w / np.linalg.norm(w), _QUATERNION_BASIS, axes=1))
    loss = np.inf
    for sweep in range(sweeps):
        for s in range(n):
            phi = psi_tensor
            for r in range(n):
                if r != s:
                    phi = _apply_factor_np(phi, factors[r], r)
            bra = np.moveaxis(psi_tensor.conj(), s + 1, 1).reshape(k, 2, -1)
            ket = np.moveaxis(phi, s + 1, 1).reshape(k, 2, -1)
            t4 = np.einsum("ipa,jqa->ijpq", bra, ket)
            gk = np.einsum("kpq,ijpq->kij", _QUATERNION_BASIS, t4)
            a = np.real(np.einsum("kij,lij->kl", gk.conj(), gk))
            b = np.real(np.einsum("kij,ij->k", gk.conj(), target))
            factors[s] = np.tensordot(_sphere_min(a, b), _QUATERNION_BASIS, axes=1)
        phi = psi_tensor
        for r in range(n):
            phi = _apply_factor_np(phi, factors[r], r)
        m = np.einsum("ia,ja->ij", psi_tensor.conj().reshape(k, -1), phi.reshape(k, -1))
        loss = float(np.sum(np.abs(m - target) ** 2))
        if loss < 1e-24:
            break
        if sweep + 1 == abandon_after and loss > abandon_loss:
            break
    return factors, loss


def optimize_gates_for_fixed_code(
    code: CodeSubspace, targets, hyper: Hyper | None = None, threshold: float = 1e-8
) -> SearchResult:
    """Keep the code fixed and fit per-qubit SU(2) factors to each target.

    Targets are independent, so each gets its own restart loop; the reported
    loss is the exact entrywise gate loss summed over targets.
    """
    hyper = hyper or Hyper(restarts=300)
    psi_tensor = code.vectors.reshape((code.K,) + (2,) * code.n)
    layers = []
    losses = []
    iterations = 0
    for t, target in enumerate(targets):
        target = np.asarray(target, dtype=np.complex128)
        best = None
        for restart in range(hyper.restarts):
            rng = None if restart == 0 else np.random.default_rng((hyper.seed, t, restart))
            factors, loss = _als_gate_fit(
                psi_tensor, target, code.n, rng,
                sweeps=80, abandon_after=12, abandon_loss=1e-2,
            )
            iterations += 1
            if best is None or loss < best[1]:
                best = (factors, loss)
            if loss < hyper.stop_loss:
                break
        layers.append(LocalUnitaryLayer(tuple(best[0])))
        losses.append(best[1])
    total = float(sum(losses))
    return SearchResult(
        code=code,
        layers=layers,
        final_loss=total,
        loss_breakdown={"gate": total},
        iterations=iterations,
        restart_index=-1,
        seed=hyper.seed,
        success=total < threshold,
    )


# Convenience wrappers used by tests and the CLI ---------------------------


def loss_kl(basis_columns: np.ndarray, n: int, max_w: int = 2) -> float:
    perms, phases = pauli_tables(n, max_w)
    return float(kl_loss_psi(jnp.asarray(basis_columns), jnp.asarray(perms),
                             jnp.asarray(phases)))


def loss_gate(basis_columns: np.ndarray, layers, targets) -> float:
    psi = np.asarray(basis_columns)
    total = 0.0
    for layer, target in zip(layers, targets):
        from .layers import apply_layer_to_vector

        moved = np.stack(
            [apply_layer_to_vector(psi[:, j], layer.n, layer) for j in range(psi.shape[1])],
            axis=1,
        )
        m = psi.conj().T @ moved
        total += float(np.sum(np.abs(m - target) ** 2))
    return total


def loss_signature(basis_columns: np.ndarray, n: int, target: float, d: int = 3) -> float:
    assert target >= 0
    perms, phases = pauli_tables(n, d - 1)
    est = float(signature_sq_psi(jnp.asarray(basis_columns), jnp.asarray(perms),
                                 jnp.asarray(phases)))
    return (est - target**2) ** 2
