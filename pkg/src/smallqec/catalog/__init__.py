"""Registry of the explicit small codes, each instantiable at a parameter
point and self-verified (orthonormality, weight<=2 KL residual, printed layer
actions) on construction.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..analysis import CodeSubspace, kl_residual, logical_action
from ..groups import GroupId
from ..layers import LocalUnitaryLayer
from ..paulis import paulis_up_to_weight
from .builders import BUILDERS, ConstraintResidual, so5_line_parameter
from .exprs import ExprError, evaluate
from .registry import ENTRIES, ENV_HOOKS, _expect_so5_line

SELF_VERIFY_KL_TOL = 1e-9
SELF_VERIFY_GATE_TOL = 1e-8


class CatalogError(Exception):
    pass


class UnknownEntry(CatalogError):
    pass


class ParamOutOfDomain(CatalogError):
    pass


class SelfVerifyFailed(CatalogError):
    pass


class NoPrintedExpectation(CatalogError):
    def __init__(self, entry_id: str, field: str):
        super().__init__(f"{entry_id} has no printed value for {field!r}")
        self.field = field


@dataclass(frozen=True)
class NamedLayer:
    name: str
    layer: LocalUnitaryLayer
    logical: np.ndarray


@dataclass(frozen=True)
class ExpectedProperties:
    entry_id: str
    group: GroupId | None = None
    lambda_star: float | None = None
    qweA: np.ndarray | None = None
    qweB: np.ndarray | None = None

    def require(self, field: str):
        value = getattr(self, field)
        if value is None:
            raise NoPrintedExpectation(self.entry_id, field)
        return value


def _entry(entry_id: str) -> dict:
    try:
        return ENTRIES[entry_id]
    except KeyError:
        raise UnknownEntry(f"no catalog entry {entry_id!r}") from None


def list_entries() -> list[dict]:
    """Static registry summary: id, parameters, claimed (n, K, d)."""
    out = []
    for entry_id, entry in sorted(ENTRIES.items()):
        out.append({
            "id": entry_id,
            "n": entry["n"],
            "K": entry["k"],
            "d": entry["d"],
            "params": {name: dict(schema) for name, schema in entry["params"].items()},
        })
    return out


def resolve_params(entry_id: str, params: dict | None) -> dict:
    entry = _entry(entry_id)
    given = dict(params or {})
    env: dict = {}
    for name, schema in entry["params"].items():
        if name in given:
            value = given.pop(name)
        else:
            value = schema.get("default")
        kind = schema["kind"]
        if kind == "sign":
            if value not in (-1, 1):
                raise ParamOutOfDomain(f"{name} must be +-1, got {value!r}")
            value = int(value)
        elif kind == "choice":
            if value not in schema["choices"]:
                raise ParamOutOfDomain(f"{name} must be one of {schema['choices']}")
        elif kind in ("real", "angle"):
            value = float(value)
            lo, hi = schema["lo"], schema["hi"]
            if kind == "real" and not (lo - 1e-12 <= value <= hi + 1e-12):
                raise ParamOutOfDomain(f"{name}={value} outside [{lo}, {hi}]")
        elif kind == "vector":
            if value is not None:
                value = [float(x) for x in value]
                if len(value) != schema["length"]:
                    raise ParamOutOfDomain(
                        f"{name} must have length {schema['length']}")
            elif not schema.get("optional") and schema.get("default") is None:
                raise ParamOutOfDomain(f"{name} is required")
        env[name] = value
    if given:
        raise ParamOutOfDomain(f"unknown parameters {sorted(given)}")
    hook = ENV_HOOKS.get(entry_id)
    return hook(env) if hook else env


def _build_layers(entry: dict, env: dict) -> list[NamedLayer]:
    out = []
    for spec in entry["layers"]:
        cond = spec.get("when")
        if cond is not None and not evaluate(cond, env):
            continue
        factors = tuple(np.asarray(evaluate(f, env)) for f in spec["factors"])
        logical = np.asarray(evaluate(spec["logical"], env))
        out.append(NamedLayer(spec["name"], LocalUnitaryLayer(factors), logical))
    return out


def instantiate(
    entry_id: str, params: dict | None = None, verify: bool = True
) -> tuple[CodeSubspace, list[NamedLayer]]:
    """Build a catalog code at a parameter point; verifies the weight<=2 KL
    residual and every layer's printed logical action unless ``verify=False``.
    """
    entry = _entry(entry_id)
    env = resolve_params(entry_id, params)
    builder = BUILDERS[entry["build"]["kind"]]
    try:
        vectors = builder(entry["build"], env)
    except ExprError as exc:
        raise ParamOutOfDomain(str(exc)) from exc
    norms = np.linalg.norm(vectors, axis=1)
    if np.abs(norms - 1).max() > 1e-9:
        raise SelfVerifyFailed(
            f"{entry_id}: codeword norms {norms} (transcription or domain error)")
    code = CodeSubspace(entry["n"], vectors)
    layers = _build_layers(entry, env)
    if verify:
        residual = kl_residual(code, paulis_up_to_weight(entry["n"], 2))
        if residual > SELF_VERIFY_KL_TOL:
            raise SelfVerifyFailed(f"{entry_id}: weight<=2 KL residual {residual:.3e}")
        for named in layers:
            m, leakage = logical_action(code, named.layer)
            if leakage > SELF_VERIFY_GATE_TOL:
                raise SelfVerifyFailed(
                    f"{entry_id}: layer {named.name} leaks {leakage:.3e}")
            defect = float(np.abs(m - named.logical).max())
            if defect > SELF_VERIFY_GATE_TOL:
                raise SelfVerifyFailed(
                    f"{entry_id}: layer {named.name} logical action off by {defect:.3e}")
    return code, layers


def _group_id(entry: dict, env: dict) -> GroupId:
    tag = entry["group"]
    if callable(tag):
        tag = tag(env)
    if tag[0] == "C":
        return GroupId.cyclic(tag[1])
    if tag[0] == "BD":
        return GroupId.binary_dihedral(tag[1])
    return GroupId.exceptional(tag[0])


def expected_properties(entry_id: str, params: dict | None = None) -> ExpectedProperties:
    """Printed expectations (signature norm, enumerator rows, group) evaluated
    at a parameter point; fields the source omits stay None and raise
    NoPrintedExpectation through ``require``.
    """
    entry = _entry(entry_id)
    env = resolve_params(entry_id, params)
    expected = entry["expected"]
    if expected == "so5":
        values = _expect_so5_line(so5_line_parameter(entry["build"], env))
    elif callable(expected):
        values = expected(env, evaluate)
    else:
        values = {
            key: (evaluate(v, env) if isinstance(v, str) else v)
            for key, v in expected.items()
        }
    lam2 = values.get("lambda_star2")
    return ExpectedProperties(
        entry_id=entry_id,
        group=_group_id(entry, env),
        lambda_star=None if lam2 is None else float(np.sqrt(lam2)),
        qweA=None if values.get("qweA") is None else np.asarray(values["qweA"], dtype=float),
        qweB=None if values.get("qweB") is None else np.asarray(values["qweB"], dtype=float),
    )


def entry_notes(entry_id: str) -> str | None:
    return _entry(entry_id).get("notes")


def verify_entry(entry_id: str, params: dict | None = None) -> dict:
    """Full verification at one parameter point: self-checks, distance,
    printed enumerator rows and signature norm, transversal group identity.
    Returns a report dict with a boolean ``ok`` plus per-check details.
    """
    from ..analysis import distance, enumerators, signature
    from ..groups import transversal_group_of_code

    report: dict = {"id": entry_id, "ok": True, "checks": {}}

    def record(name, ok, detail):
        report["checks"][name] = {"ok": bool(ok), "detail": detail}
        report["ok"] = report["ok"] and bool(ok)

    try:
        code, layers = instantiate(entry_id, params)
        record("self-verify", True, "kl residual and layer actions within tolerance")
    except CatalogError as exc:
        record("self-verify", False, str(exc))
        return report
    entry = _entry(entry_id)

    d, witness = distance(code, max_w=3)
    dist_ok = (not isinstance(d, int) and False) or d == entry["d"]
    record("distance", d == entry["d"],
           f"distance {d}" + (f" (witness {witness})" if witness else ""))

    expected = expected_properties(entry_id, params)
    lam_vec, lam_star = signature(code, entry["d"])
    pair = None
    if expected.qweA is not None or expected.qweB is not None:
        pair = enumerators(code)
        if expected.qweA is not None:
            err = float(np.abs(pair.A - expected.qweA).max())
            record("enumerator-A", err < 1e-6, f"max deviation {err:.2e}")
        if expected.qweB is not None:
            err = float(np.abs(pair.B - expected.qweB).max())
            record("enumerator-B", err < 1e-6, f"max deviation {err:.2e}")
        cross = abs(lam_star**2 - float(pair.A[1 : entry["d"]].sum()))
        record("signature-crosscheck", cross < 1e-9,
               f"|lambda*^2 - sum A_j| = {cross:.2e}")
    if expected.lambda_star is not None:
        err = abs(lam_star - expected.lambda_star)
        record("lambda-star", err < 1e-6,
               f"computed {lam_star:.9f} vs printed {expected.lambda_star:.9f}")

    if layers:
        gid = transversal_group_of_code(code, [nl.layer for nl in layers])
        record("group", gid == expected.group,
               f"identified {gid}, claimed {expected.group}")
    return report
