"""Finite subgroups of SU(2): breadth-first closure, conjugacy classes,
identification by (abelian, order, class count), and the transversal group
of a code under a set of layers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .analysis import CodeSubspace, logical_action
from .gates import F, HHAT, I2, PHI, SHAT, XHAT, ZHAT, is_su2, rescale_to_su2, zrot
from .layers import LocalUnitaryLayer

ELEMENT_TOL = 1e-8
HASH_GRID = 1e-6
DEFAULT_MAX_ORDER = 1000


class OrderExceeded(RuntimeError):
    pass


class SubspaceNotPreserved(RuntimeError):
    pass


@dataclass(frozen=True)
class GroupId:
    """Tagged family: C(2m) | BD(2m) | 2T | 2O | 2I | unknown."""

    kind: str
    order: int
    class_count: int = 0

    @staticmethod
    def cyclic(two_m: int) -> "GroupId":
        assert two_m % 2 == 0
        return GroupId("C", two_m, two_m)

    @staticmethod
    def binary_dihedral(two_m: int) -> "GroupId":
        assert two_m % 2 == 0 and two_m >= 4
        return GroupId("BD", 2 * two_m, two_m // 2 + 3)

    @staticmethod
    def exceptional(kind: str) -> "GroupId":
        order, classes = {"2T": (24, 7), "2O": (48, 8), "2I": (120, 9)}[kind]
        return GroupId(kind, order, classes)

    @staticmethod
    def unknown(order: int, class_count: int) -> "GroupId":
        return GroupId("unknown", order, class_count)

    @property
    def is_unknown(self) -> bool:
        return self.kind == "unknown"

    def __str__(self) -> str:
        if self.kind == "C":
            return f"C{self.order}"
        if self.kind == "BD":
            return f"BD{self.order // 2}"
        if self.kind == "unknown":
            return f"unknown(order={self.order}, classes={self.class_count})"
        return self.kind


class _ElementSet:
    """Dedup of 2x2 complex matrices: rounded-key hash buckets, confirmed by
    exact entrywise distance; neighbor keys probed near grid boundaries."""

    def __init__(self, tol: float = ELEMENT_TOL, grid: float = HASH_GRID):
        self.tol = tol
        self.grid = grid
        self.buckets: dict[tuple, list[int]] = {}
        self.elements: list[np.ndarray] = []

    def _components(self, u: np.ndarray) -> np.ndarray:
        return np.concatenate([u.real.ravel(), u.imag.ravel()]) / self.grid

    def _candidate_keys(self, q: np.ndarray):
        edge = 2 * self.tol / self.grid
        options = []
        for v in q:
            r = int(np.floor(v + 0.5))
            frac = v + 0.5 - np.floor(v + 0.5)
            cands = [r]
            if frac < edge:
                cands.append(r - 1)
            elif frac > 1 - edge:
                cands.append(r + 1)
            options.append(cands)
        return itertools.product(*options)

    def find(self, u: np.ndarray) -> int | None:
        q = self._components(u)
        for key in self._candidate_keys(q):
            for idx in self.buckets.get(key, ()):
                if np.abs(self.elements[idx] - u).max() < self.tol:
                    return idx
        return None

    def add(self, u: np.ndarray) -> bool:
        if self.find(u) is not None:
            return False
        q = self._components(u)
        key = tuple(int(np.floor(v + 0.5)) for v in q)
        self.buckets.setdefault(key, []).append(len(self.elements))
        self.elements.append(u)
        return True


@dataclass
class FiniteSu2Group:
    elements: list[np.ndarray]
    generators: list[np.ndarray]
    tol: float = ELEMENT_TOL
    _class_count: int | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def abelian(self) -> bool:
        for a, b in itertools.combinations(self.generators, 2):
            if np.abs(a @ b - b @ a).max() > self.tol:
                return False
        return True

    @property
    def class_count(self) -> int:
        if self._class_count is None:
            self._class_count = conjugacy_class_count(self)
        return self._class_count


def closure(
    gens,
    max_order: int = DEFAULT_MAX_ORDER,
    tol: float = ELEMENT_TOL,
) -> FiniteSu2Group:
    """Breadth-first multiplicative closure of determinant-1 generators."""
    gens = [np.asarray(g, dtype=np.complex128) for g in gens]
    for g in gens:
        assert is_su2(g, atol=1e-7), "generators must be SU(2) elements"
    dedup = _ElementSet(tol=tol)
    dedup.add(I2.copy())
    frontier = [g for g in gens if dedup.add(g)]
    while frontier:
        new = []
        for u in frontier:
            for g in gens:
                prod = u @ g
                if dedup.add(prod):
                    new.append(prod)
        if len(dedup.elements) > max_order:
            raise OrderExceeded(f"closure exceeded {max_order} elements")
        frontier = new
    return FiniteSu2Group(elements=dedup.elements, generators=gens, tol=tol)


def conjugacy_class_count(g: FiniteSu2Group) -> int:
    """Partition by conjugation orbits under the generators (exact for the
    full group since generators generate all inner automorphisms)."""
    dedup = _ElementSet(tol=g.tol)
    for u in g.elements:
        dedup.add(u)
    conjugators = [(s, s.conj().T) for s in g.generators]
    assigned = [False] * len(dedup.elements)
    count = 0
    for start in range(len(dedup.elements)):
        if assigned[start]:
            continue
        count += 1
        stack = [start]
        assigned[start] = True
        while stack:
            idx = stack.pop()
            u = dedup.elements[idx]
            for s, s_inv in conjugators:
                j = dedup.find(s @ u @ s_inv)
                assert j is not None, "group not closed under conjugation"
                if not assigned[j]:
                    assigned[j] = True
                    stack.append(j)
    return count


def identify(g: FiniteSu2Group) -> GroupId:
    """Family from (abelian flag, order, class count); Unknown when outside
    the SU(2) finite-subgroup catalogue (e.g. odd cyclic without -I)."""
    order = g.order
    if g.abelian:
        if order % 2 == 0:
            return GroupId.cyclic(order)
        return GroupId.unknown(order, order)
    classes = g.class_count
    if (order, classes) == (24, 7):
        return GroupId.exceptional("2T")
    if (order, classes) == (48, 8):
        return GroupId.exceptional("2O")
    if (order, classes) == (120, 9):
        return GroupId.exceptional("2I")
    if order % 4 == 0 and classes == order // 4 + 3:
        return GroupId.binary_dihedral(order // 2)
    return GroupId.unknown(order, classes)


def standard_generators(gid: GroupId) -> list[np.ndarray]:
    """Table-standard generating sets for each family."""
    if gid.kind == "C":
        m = gid.order // 2
        return [zrot(2 * np.pi / m)]
    if gid.kind == "BD":
        m = gid.order // 4
        return [XHAT, zrot(2 * np.pi / m)]
    if gid.kind == "2T":
        return [XHAT, F]
    if gid.kind == "2O":
        return [SHAT, HHAT]
    if gid.kind == "2I":
        return [XHAT, ZHAT @ PHI]
    raise ValueError("no standard generators for an unknown group id")


def transversal_group_of_code(
    code: CodeSubspace,
    layers: list[LocalUnitaryLayer],
    tol: float = 1e-8,
    max_order: int = DEFAULT_MAX_ORDER,
    adjoin_minus_identity: bool = True,
    return_info: bool = False,
):
    """Identify the group generated by the logical actions of the layers.

    Each logical action is rescaled to determinant 1 before closure; the
    removed global phases are returned in the info dict. With
    ``adjoin_minus_identity`` (default) -I joins the generating set, matching
    the convention that the trivial transversal group is C2 = {+-I}.
    """
    gens: list[np.ndarray] = []
    phases: list[complex] = []
    for layer in layers:
        m, leakage = logical_action(code, layer)
        if leakage > tol:
            raise SubspaceNotPreserved(f"layer leaks out of the code space: {leakage:.3e}")
        su2, phase = rescale_to_su2(m)
        gens.append(su2)
        phases.append(phase)
    if adjoin_minus_identity:
        gens.append(-I2)
    group = closure(gens, max_order=max_order)
    gid = identify(group)
    if return_info:
        return gid, {"group": group, "phases": phases}
    return gid


# ---------------------------------------------------------------------------
# Conjugacy class / irrep reference data


@dataclass(frozen=True)
class ClassData:
    family: str
    order: int
    class_sizes: tuple[int, ...]
    irrep_dims: tuple[int, ...]
    characters: np.ndarray | None = None


def bd_class_data(m: int) -> ClassData:
    """Binary dihedral BD_2m: class sizes [1,1,2,...,2,m,m], dims [1,1,1,1,2,...]."""
    assert m >= 2
    sizes = (1, 1) + (2,) * (m - 1) + (m, m)
    dims = (1, 1, 1, 1) + (2,) * (m - 1)
    return ClassData("BD", 4 * m, sizes, dims)


def cyclic_class_data(two_m: int) -> ClassData:
    return ClassData("C", two_m, (1,) * two_m, (1,) * two_m)


_TOKENS = {
    "s2": np.sqrt(2),
    "a": np.exp(1j * np.pi / 3),
    "ac": np.exp(-1j * np.pi / 3),
    "g": (np.sqrt(5) + 1) / 2,
    "h": (np.sqrt(5) - 1) / 2,
}


def _parse_token(tok: str) -> complex:
    sign = 1.0
    if tok.startswith("-") and not tok.lstrip("-").isdigit():
        sign, tok = -1.0, tok[1:]
    if tok in _TOKENS:
        return sign * _TOKENS[tok]
    return sign * float(tok)


def load_character_tables() -> dict[str, ClassData]:
    """Parse the shipped character-table text file for 2T, 2O, 2I."""
    text = resources.files("smallqec").joinpath("data/character_tables.txt").read_text()
    tables: dict[str, ClassData] = {}
    block: dict[str, list] = {}

    def flush():
        if not block:
            return
        chi = np.array([[_parse_token(t) for t in row] for row in block["chi"]])
        tables[block["family"]] = ClassData(
            family=block["family"],
            order=int(block["order"]),
            class_sizes=tuple(int(x) for x in block["sizes"]),
            irrep_dims=tuple(int(x) for x in block["dims"]),
            characters=chi,
        )

    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if key == "family":
            flush()
            block = {"family": value, "chi": []}
        elif key == "chi":
            block["chi"].append(value.split())
        else:
            block[key] = value.split() if key in ("sizes", "dims") else value
    flush()
    return tables
