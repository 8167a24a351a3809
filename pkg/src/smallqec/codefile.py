"""Interchange formats: code files and layer files.

Amplitudes and matrix entries serialize as 17-significant-digit decimal
strings so emitted files diff cleanly and round-trip at machine precision.
"""
from __future__ import annotations

import json

import numpy as np

from .analysis import CodeSubspace
from .layers import LocalUnitaryLayer
from .states import bitstring_to_index, index_to_bitstring

CODE_FORMAT = "smallqec-code/1"
LAYER_FORMAT = "smallqec-layer/1"
LOAD_NORM_TOL = 1e-6


class CodeFileError(ValueError):
    pass


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def code_to_dict(code: CodeSubspace, metadata: dict | None = None) -> dict:
    basis = []
    for row in code.vectors:
        terms = []
        for idx in np.nonzero(np.abs(row) > 0)[0]:
            terms.append([index_to_bitstring(int(idx), code.n),
                          _fmt(row[idx].real), _fmt(row[idx].imag)])
        basis.append(terms)
    out = {"format": CODE_FORMAT, "n": code.n, "K": code.K, "basis": basis}
    if metadata:
        out["metadata"] = metadata
    return out


def code_from_dict(data: dict, renormalize: bool = False) -> tuple[CodeSubspace, dict]:
    if data.get("format") != CODE_FORMAT:
        raise CodeFileError(f"unsupported format tag {data.get('format')!r}")
    n, k = int(data["n"]), int(data["K"])
    basis = data["basis"]
    if len(basis) != k:
        raise CodeFileError(f"expected {k} basis vectors, found {len(basis)}")
    vectors = np.zeros((k, 2**n), dtype=np.complex128)
    for i, terms in enumerate(basis):
        seen = set()
        for bits, re, im in terms:
            if len(bits) != n or set(bits) - {"0", "1"}:
                raise CodeFileError(f"bad bitstring {bits!r}")
            if bits in seen:
                raise CodeFileError(f"duplicate bitstring {bits!r} in vector {i}")
            seen.add(bits)
            value = complex(float(re), float(im))
            if not np.isfinite(value.real) or not np.isfinite(value.imag):
                raise CodeFileError(f"non-finite amplitude on {bits!r}")
            vectors[i, bitstring_to_index(bits)] = value
        norm = np.linalg.norm(vectors[i])
        if abs(norm - 1) > LOAD_NORM_TOL:
            if not renormalize:
                raise CodeFileError(
                    f"vector {i} norm {norm:.8f} outside tolerance; "
                    "pass --renormalize to accept")
            vectors[i] /= norm
    try:
        code = CodeSubspace(n, vectors)
    except ValueError as exc:
        raise CodeFileError(str(exc)) from exc
    return code, data.get("metadata", {})


def layer_to_dict(layer: LocalUnitaryLayer, target: np.ndarray | None = None,
                  name: str | None = None) -> dict:
    factors = [[[_fmt(u[r, c].real), _fmt(u[r, c].imag)] for c in range(2) for r in []] or
               [[[_fmt(u[r, c].real), _fmt(u[r, c].imag)] for c in range(2)] for r in range(2)]
               for u in layer.factors]
    out = {"format": LAYER_FORMAT, "n": layer.n, "factors": factors}
    if target is not None:
        out["target"] = [[[_fmt(target[r, c].real), _fmt(target[r, c].imag)]
                          for c in range(2)] for r in range(2)]
    if name:
        out["name"] = name
    return out


def _matrix_from_entries(entries) -> np.ndarray:
    return np.array([[complex(float(entries[r][c][0]), float(entries[r][c][1]))
                      for c in range(2)] for r in range(2)])


def layer_from_dict(data: dict) -> tuple[LocalUnitaryLayer, np.ndarray | None]:
    if data.get("format") != LAYER_FORMAT:
        raise CodeFileError(f"unsupported format tag {data.get('format')!r}")
    factors = tuple(_matrix_from_entries(f) for f in data["factors"])
    try:
        layer = LocalUnitaryLayer(factors)
    except ValueError as exc:
        raise CodeFileError(str(exc)) from exc
    target = _matrix_from_entries(data["target"]) if "target" in data else None
    return layer, target


def save_json(path, data: dict) -> None:
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


def load_json(path) -> dict:
    with open(path) as fh:
        return json.load(fh)
