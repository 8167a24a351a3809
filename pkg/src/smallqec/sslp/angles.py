"""Angle vectors for transversal diagonal gates and their support sets."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator


class EmptySupport(ValueError):
    def __init__(self, k: int):
        super().__init__(f"logical index {k} has empty support")
        self.k = k


@dataclass(frozen=True)
class AngleVector:
    """Sorted integers (a_1..a_n) mod m defining per-qubit diagonal phases."""

    m: int
    a: tuple[int, ...]

    def __post_init__(self):
        assert self.m >= 2
        assert all(0 <= x < self.m for x in self.a)
        assert tuple(sorted(self.a)) == self.a

    @property
    def n(self) -> int:
        return len(self.a)

    def weighted_sum(self, s: int) -> int:
        """Sum of a_j over the set bits of s (qubit 1 = most significant)."""
        total = 0
        for j in range(self.n):
            if (s >> (self.n - 1 - j)) & 1:
                total += self.a[j]
        return total % self.m

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.a)) + f") mod {self.m}"


def enumerate_angle_vectors(n: int, m: int, mode: str = "bd") -> Iterator[AngleVector]:
    """All sorted angle vectors, lexicographic; BD mode keeps sum = -1 (mod m).

    General mode applies no congruence (downstream stages filter instead).
    """
    assert m >= 2 and n >= 1
    assert mode in ("bd", "general")
    for a in itertools.combinations_with_replacement(range(m), n):
        if mode == "bd" and sum(a) % m != m - 1:
            continue
        yield AngleVector(m, a)


@dataclass(frozen=True)
class SupportSets:
    """Per logical index, the basis strings compatible with the diagonal gate."""

    n: int
    m: int
    b: tuple[int, ...]
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for sk in self.sets:
            assert not (seen & set(sk)), "support sets must be disjoint"
            seen |= set(sk)


def support_sets(a: AngleVector, b) -> SupportSets:
    """S_k = strings whose weighted sum is b_k (mod m); raises EmptySupport."""
    b = tuple(int(x) % a.m for x in b)
    assert len(set(b)) == len(b), "b values must be distinct mod m"
    classes: dict[int, list[int]] = {bk: [] for bk in b}
    for s in range(2**a.n):
        w = a.weighted_sum(s)
        if w in classes:
            classes[w].append(s)
    sets = []
    for k, bk in enumerate(b):
        if not classes[bk]:
            raise EmptySupport(k)
        sets.append(tuple(classes[bk]))
    return SupportSets(a.n, a.m, b, tuple(sets))


def bd_support_sets(a: AngleVector) -> SupportSets:
    """BD-mode supports b = (0, m-1); checks S_1 is the complement image of S_0."""
    supports = support_sets(a, (0, a.m - 1))
    full = 2**a.n - 1
    assert set(supports.sets[1]) == {full ^ s for s in supports.sets[0]}
    return supports
