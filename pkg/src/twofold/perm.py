"""Permutations of ``0..n-1`` and small permutation groups by full enumeration."""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Sequence

DEFAULT_CLOSURE_CAP = 10**6


class ResourceError(RuntimeError):
    """A configured search or enumeration cap was exceeded."""


class Permutation(tuple):
    """Immutable permutation; ``p[i]`` is the image of ``i``.

    ``p * q`` is composition ``p o q`` (apply ``q`` first).
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        p = super().__new__(cls, images)
        if sorted(p) != list(range(len(p))):
            raise ValueError(f"not a permutation: {tuple(p)}")
        return p

    @classmethod
    def _trusted(cls, images: Iterable[int]) -> "Permutation":
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(n))
        for c in cycles:
            for i, a in enumerate(c):
                img[a] = c[(i + 1) % len(c)]
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self) != len(other):
            raise ValueError(f"degree mismatch: {len(self)} vs {len(other)}")
        return Permutation._trusted(self[i] for i in other)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Permutation._trusted(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self)
        out = []
        for s in range(len(self)):
            if seen[s]:
                continue
            c = [s]
            seen[s] = True
            j = self[s]
            while j != s:
                c.append(j)
                seen[j] = True
                j = self[j]
            out.append(tuple(c))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if len(self) else 1

    def cycle_notation(self) -> str:
        cs = [c for c in self.cycles() if len(c) > 1]
        if not cs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_notation()}, n={len(self)})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def order(p: Permutation) -> int:
    return p.order()


class PermGroup:
    """Permutation group with a lazily computed element list."""

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), *, elements=None, cap: int = DEFAULT_CLOSURE_CAP):
        self.degree = degree
        self.generators = [Permutation(g) for g in generators]
        for g in self.generators:
            if len(g) != degree:
                raise ValueError(f"generator of degree {len(g)} in a group of degree {degree}")
        self.cap = cap
        self._elements = None if elements is None else sorted(elements)
        self._set = None

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Permutation]) -> "PermGroup":
        els = sorted(set(elements))
        return cls(degree, small_generating_set(els, degree), elements=els)

    @property
    def elements(self) -> list[Permutation]:
        if self._elements is None:
            self._elements = sorted(_closure_elements(self.degree, self.generators, self.cap))
        return self._elements

    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        if self._set is None:
            self._set = frozenset(self.elements)
        return tuple(p) in self._set

    def orbits(self) -> list[list[int]]:
        parent = list(range(self.degree))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        gens = self.generators if self._elements is None else self.elements
        for g in gens:
            for i, j in enumerate(g):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        groups: dict[int, list[int]] = {}
        for v in range(self.degree):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order()})"


def _closure_elements(degree: int, generators: Sequence[Permutation], cap: int) -> set[Permutation]:
    e = Permutation.identity(degree)
    seen = {e}
    queue = deque([e])
    while queue:
        p = queue.popleft()
        for g in generators:
            q = g * p
            if q not in seen:
                seen.add(q)
                if len(seen) > cap:
                    raise ResourceError(f"group closure exceeded the cap of {cap} elements")
                queue.append(q)
    return seen


def closure(generators: Iterable[Permutation], degree: int | None = None, cap: int = DEFAULT_CLOSURE_CAP) -> PermGroup:
    gens = [Permutation(g) for g in generators]
    if degree is None:
        if not gens:
            raise ValueError("degree is required when there are no generators")
        degree = len(gens[0])
    group = PermGroup(degree, gens, cap=cap)
    group.elements  # noqa: B018 - force enumeration so the cap is enforced here
    return group


def small_generating_set(elements: Sequence[Permutation], degree: int) -> list[Permutation]:
    """Greedy generating set: add the first element not yet generated."""
    gens: list[Permutation] = []
    have = {Permutation.identity(degree)}
    for p in elements:
        if p in have:
            continue
        gens.append(p)
        have = _closure_elements(degree, gens, max(len(elements), 1))
        if len(have) == len(elements):
            break
    return gens
