"""Three-stage search for codes with transversal diagonal gates: congruence
support sets, LP feasibility filter from the Z-type conditions, and
block-separable amplitude optimization inside the surviving supports.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..analysis import CodeSubspace, kl_residual
from ..paulis import paulis_up_to_weight
from ..stiefel import Hyper, _adam_minimize, kl_loss_psi, pauli_tables
from .angles import AngleVector, EmptySupport, SupportSets, bd_support_sets, enumerate_angle_vectors, support_sets
from .lp import FEAS_TOL, phase1_feasible_exact, phase1_feasible_float


class NonConverged(RuntimeError):
    def __init__(self, best_residual: float):
        super().__init__(f"no restart reached the threshold; best residual {best_residual:.3e}")
        self.best_residual = best_residual


@dataclass(frozen=True)
class LpWitness:
    feasible: bool
    x: tuple[np.ndarray, ...] = ()
    alphas: np.ndarray | None = None
    betas: np.ndarray | None = None


@dataclass
class SslpCandidate:
    angle_vector: AngleVector
    supports: SupportSets | None = None
    witness: LpWitness | None = None
    code: CodeSubspace | None = None
    residual: float | None = None
    rejected_at: str | None = None


def _bit(s: int, i: int, n: int) -> int:
    return (s >> (n - 1 - i)) & 1


def _bd_lp_system(supports: SupportSets):
    s0 = supports.sets[0]
    n = supports.n
    a = np.zeros((n + 1, len(s0)))
    a[0, :] = 1.0
    for i in range(n):
        a[1 + i, :] = [1.0 - 2.0 * _bit(s, i, n) for s in s0]
    b = np.zeros(n + 1)
    b[0] = 1.0
    return a, b


def _general_lp_system(supports: SupportSets):
    """Variables: per-block x, then split alpha_i^+- and beta_ij^+-."""
    n, sets = supports.n, supports.sets
    k = len(sets)
    sizes = [len(sk) for sk in sets]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    nx = sum(sizes)
    nfree = n + len(pairs)
    cols = nx + 2 * nfree
    rows = k + k * n + k * len(pairs)
    a = np.zeros((rows, cols))
    b = np.zeros(rows)
    offs = np.cumsum([0] + sizes)
    row = 0
    for blk in range(k):
        a[row, offs[blk] : offs[blk + 1]] = 1.0
        b[row] = 1.0
        row += 1
    for blk in range(k):
        for i in range(n):
            for c, s in enumerate(sets[blk]):
                a[row, offs[blk] + c] = 1.0 - 2.0 * _bit(s, i, n)
            a[row, nx + 2 * i] = -1.0
            a[row, nx + 2 * i + 1] = 1.0
            row += 1
    for blk in range(k):
        for p, (i, j) in enumerate(pairs):
            for c, s in enumerate(sets[blk]):
                a[row, offs[blk] + c] = 1.0 - 2.0 * ((_bit(s, i, n) + _bit(s, j, n)) % 2)
            a[row, nx + 2 * n + 2 * p] = -1.0
            a[row, nx + 2 * n + 2 * p + 1] = 1.0
            row += 1
    return a, b, sizes, n, pairs


def lp_filter(a: AngleVector, supports: SupportSets, mode: str = "bd",
              exact: bool = False) -> LpWitness:
    """Feasibility of the Z-type conditions; BD mode solves the reduced
    single-block system (alpha forced to zero, beta rows dropped)."""
    if mode == "bd":
        mat, rhs = _bd_lp_system(supports)
        if exact:
            feasible, x = phase1_feasible_exact(mat.astype(int).tolist(), rhs.astype(int).tolist())
            x = np.array([float(v) for v in x])
        else:
            feasible, x = phase1_feasible_float(mat, rhs)
        return LpWitness(feasible=bool(feasible), x=(x,) if feasible else ())
    mat, rhs, sizes, n, pairs = _general_lp_system(supports)
    if exact:
        feasible, x = phase1_feasible_exact(mat.astype(int).tolist(), rhs.astype(int).tolist())
        x = np.array([float(v) for v in x])
    else:
        feasible, x = phase1_feasible_float(mat, rhs)
    if not feasible:
        return LpWitness(feasible=False)
    offs = np.cumsum([0] + sizes)
    blocks = tuple(x[offs[i] : offs[i + 1]] for i in range(len(sizes)))
    nx = offs[-1]
    alphas = x[nx : nx + 2 * n : 2] - x[nx + 1 : nx + 2 * n : 2]
    bet = x[nx + 2 * n :]
    betas = bet[0::2] - bet[1::2]
    return LpWitness(feasible=True, x=blocks, alphas=alphas, betas=betas)


@dataclass
class SslpHyper:
    restarts: int = 50
    iters: int = 6000
    step: float = 0.02
    seed: int = 0
    threshold: float = 1e-6
    error_weight: int = 2


def _make_block_loss(n: int, supports: SupportSets, mode: str, perms, phases):
    import jax.numpy as jnp

    full = 2**n - 1
    if mode == "bd":
        s0 = np.array(supports.sets[0])
        comp = full ^ s0
        nvar = len(s0)

        def build_psi(x):
            c = x[:nvar] + 1j * x[nvar:]
            c = c / jnp.linalg.norm(c)
            psi = jnp.zeros((2**n, 2), dtype=jnp.complex128)
            psi = psi.at[s0, 0].set(c)
            psi = psi.at[comp, 1].set(c)
            return psi
    else:
        sets = [np.array(sk) for sk in supports.sets]
        sizes = [len(sk) for sk in sets]
        offs = np.cumsum([0] + sizes)
        nvar = sum(sizes)

        def build_psi(x):
            re, im = x[:nvar], x[nvar:]
            psi = jnp.zeros((2**n, len(sets)), dtype=jnp.complex128)
            for k, sk in enumerate(sets):
                c = re[offs[k] : offs[k + 1]] + 1j * im[offs[k] : offs[k + 1]]
                c = c / jnp.linalg.norm(c)
                psi = psi.at[sk, k].set(c)
            return psi

    def loss(x):
        return kl_loss_psi(build_psi(x), perms, phases)

    return loss, build_psi, nvar


def block_optimize(candidate: SslpCandidate, hyper: SslpHyper | None = None,
                   mode: str = "bd") -> tuple[CodeSubspace, float]:
    """Minimize the full weight<=2 KL residual over amplitudes confined to the
    support sets; raises NonConverged when no restart beats the threshold."""
    import jax.numpy as jnp

    hyper = hyper or SslpHyper()
    witness = candidate.witness
    if witness is None or not witness.feasible:
        raise ValueError("block_optimize requires a feasible LP witness")
    supports = candidate.supports
    n = supports.n
    perms, phases = pauli_tables(n, hyper.error_weight)
    perms, phases = jnp.asarray(perms), jnp.asarray(phases)
    loss, build_psi, nvar = _make_block_loss(n, supports, mode, perms, phases)
    mags = np.sqrt(np.clip(np.concatenate(witness.x), 0.0, None))
    best = None
    for restart in range(hyper.restarts):
        rng = np.random.default_rng((hyper.seed, restart))
        phase = np.exp(1j * rng.uniform(0, 2 * np.pi, size=nvar))
        c0 = mags * phase
        x0 = np.concatenate([c0.real, c0.imag])
        adam = Hyper(step=hyper.step, iters=hyper.iters, stop_loss=hyper.threshold * 1e-4)
        x, value, _ = _adam_minimize(loss, x0, adam)
        if best is None or value < best[1]:
            best = (x, value)
        if value < hyper.threshold * 1e-2:
            break
    x, value = best
    if value >= hyper.threshold:
        raise NonConverged(value)
    psi = np.asarray(build_psi(jnp.asarray(x)))
    code = CodeSubspace(n, psi.T)
    residual = kl_residual(code, paulis_up_to_weight(n, hyper.error_weight))
    return code, residual


def sslp_pipeline(n: int, K: int, m: int, mode: str = "bd",
                  hyper: SslpHyper | None = None, b=None,
                  filter_only: bool = False, exact_lp: bool = False):
    """Chain the three stages; returns (candidates, records) with one record
    per angle vector naming the stage it survived or died at."""
    assert mode in ("bd", "general")
    if mode == "bd":
        assert K == 2, "BD specialization is a K=2 construction"
    hyper = hyper or SslpHyper()
    if b is None:
        b = (0, m - 1) if K == 2 else tuple(range(K))
    candidates: list[SslpCandidate] = []
    records: list[dict] = []
    for a in enumerate_angle_vectors(n, m, mode):
        cand = SslpCandidate(angle_vector=a)
        try:
            cand.supports = bd_support_sets(a) if mode == "bd" else support_sets(a, b)
        except EmptySupport as exc:
            cand.rejected_at = "support"
            records.append({"stage": "support", "angle_vector": list(a.a),
                            "verdict": "empty", "detail": str(exc)})
            candidates.append(cand)
            continue
        cand.witness = lp_filter(a, cand.supports, mode, exact=exact_lp)
        if not cand.witness.feasible:
            cand.rejected_at = "lp"
            records.append({"stage": "lp", "angle_vector": list(a.a),
                            "verdict": "infeasible", "detail": ""})
            candidates.append(cand)
            continue
        records.append({"stage": "lp", "angle_vector": list(a.a),
                        "verdict": "feasible", "detail": ""})
        if not filter_only:
            try:
                cand.code, cand.residual = block_optimize(cand, hyper, mode)
                records.append({"stage": "optimize", "angle_vector": list(a.a),
                                "verdict": "code", "detail": f"residual {cand.residual:.3e}"})
            except NonConverged as exc:
                cand.rejected_at = "optimize"
                records.append({"stage": "optimize", "angle_vector": list(a.a),
                                "verdict": "non-converged",
                                "detail": f"best residual {exc.best_residual:.3e}"})
        candidates.append(cand)
    return candidates, records


def lp_survivors(n: int, m: int, mode: str = "bd", exact_lp: bool = False):
    """Angle vectors that pass support construction and the LP filter."""
    out = []
    for a in enumerate_angle_vectors(n, m, mode):
        try:
            supports = bd_support_sets(a) if mode == "bd" else support_sets(a, (0, m - 1))
        except EmptySupport:
            continue
        if lp_filter(a, supports, mode, exact=exact_lp).feasible:
            out.append(a)
    return out
