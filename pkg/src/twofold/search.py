"""Individualization-refinement search for automorphisms and isomorphisms.

Graphs are given as bit-rows with an initial vertex colouring.  Colours are
renamed canonically (by sorted key) after every refinement round, so the
search tree depends only on the isomorphism type of the coloured graph.  Each
leaf equivalent to the first leaf yields exactly one automorphism, which makes
the enumeration complete without a closure step.
"""

from __future__ import annotations

import os
from collections import Counter
from typing import Hashable, Iterator, Sequence

from .graph import bits, image_mask
from .perm import ResourceError

DEFAULT_NODE_BUDGET = 10**8
BUDGET_ENV = "TWOFOLD_NODE_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_NODE_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


class Budget:
    """Monotonic node counter shared by one search."""

    def __init__(self, limit: int | None = None):
        self.limit = default_budget() if limit is None else limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise ResourceError(f"search node budget of {self.limit} exceeded (set {BUDGET_ENV} to raise it)")


def canonical_colours(keys: Sequence[Hashable]) -> list[int]:
    idx = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [idx[k] for k in keys]


def refine(rows: Sequence[int], colours: Sequence[int]) -> tuple[list[int], tuple[int, ...]]:
    """Equitable refinement; returns the stable colouring and a trace of hashes."""
    cols = list(colours)
    ncol = len(set(cols))
    trace = []
    while True:
        keys = [(cols[v], tuple(sorted(cols[w] for w in bits(rows[v])))) for v in range(len(rows))]
        counts = Counter(keys)
        uniq = sorted(counts)
        trace.append(hash(tuple((k, counts[k]) for k in uniq)))
        if len(uniq) == ncol:
            return cols, tuple(trace)
        idx = {k: i for i, k in enumerate(uniq)}
        cols = [idx[k] for k in keys]
        ncol = len(uniq)


def _target_cell(cols: Sequence[int]) -> list[int] | None:
    """Vertices of the non-singleton cell with the smallest colour."""
    counts = Counter(cols)
    multi = [c for c, k in counts.items() if k > 1]
    if not multi:
        return None
    c = min(multi)
    return [v for v, x in enumerate(cols) if x == c]


def _individualize(cols: Sequence[int], v: int) -> list[int]:
    return canonical_colours([2 * c + (u == v) for u, c in enumerate(cols)])


class _Tree:
    def __init__(self, rows: Sequence[int], colours: Sequence[int], budget: Budget):
        self.rows = rows
        self.budget = budget
        budget.tick()
        self.root, self.root_trace = refine(rows, colours)

    def child(self, cols: Sequence[int], v: int) -> tuple[list[int], tuple[int, ...]]:
        self.budget.tick()
        return refine(self.rows, _individualize(cols, v))

    def first_path(self) -> tuple[list[tuple[int, ...]], list[int]]:
        traces = [self.root_trace]
        cols = self.root
        while (cell := _target_cell(cols)) is not None:
            cols, tr = self.child(cols, cell[0])
            traces.append(tr)
        return traces, cols

    def leaves(self, traces: Sequence[tuple[int, ...]]) -> Iterator[list[int]]:
        """Discrete colourings reachable along nodes whose traces match ``traces``."""
        if self.root_trace != traces[0]:
            return
        stack = [(self.root, 0)]
        while stack:
            cols, depth = stack.pop()
            cell = _target_cell(cols)
            if cell is None:
                yield cols
                continue
            if depth + 1 >= len(traces):
                continue
            children = []
            for v in cell:
                ch, tr = self.child(cols, v)
                if tr == traces[depth + 1]:
                    children.append(ch)
            stack.extend((ch, depth + 1) for ch in reversed(children))


def _leaf_map(leaf_from: Sequence[int], leaf_to: Sequence[int]) -> list[int]:
    where = [0] * len(leaf_to)
    for v, c in enumerate(leaf_to):
        where[c] = v
    return [where[c] for c in leaf_from]


def _is_iso(rows1: Sequence[int], rows2: Sequence[int], g: Sequence[int]) -> bool:
    return all(image_mask(rows1[u], g) == rows2[g[u]] for u in range(len(rows1)))


def automorphisms(rows: Sequence[int], colours: Sequence[Hashable] | None = None, budget: int | Budget | None = None) -> list[tuple[int, ...]]:
    """All colour-preserving automorphisms, sorted."""
    n = len(rows)
    b = budget if isinstance(budget, Budget) else Budget(budget)
    init = canonical_colours(colours if colours is not None else [0] * n)
    tree = _Tree(rows, init, b)
    traces, leaf0 = tree.first_path()
    out = []
    for leaf in tree.leaves(traces):
        g = _leaf_map(leaf0, leaf)
        if _is_iso(rows, rows, g):
            out.append(tuple(g))
    out.sort()
    return out


def isomorphism(rows1: Sequence[int], colours1: Sequence[Hashable] | None, rows2: Sequence[int], colours2: Sequence[Hashable] | None, budget: int | Budget | None = None) -> tuple[int, ...] | None:
    """A colour-preserving isomorphism from graph 1 to graph 2, or None."""
    n = len(rows1)
    if len(rows2) != n:
        return None
    c1 = list(colours1) if colours1 is not None else [0] * n
    c2 = list(colours2) if colours2 is not None else [0] * n
    if Counter(c1) != Counter(c2):
        return None
    shared = {k: i for i, k in enumerate(sorted(set(c1)))}
    b = budget if isinstance(budget, Budget) else Budget(budget)
    t1 = _Tree(rows1, [shared[k] for k in c1], b)
    t2 = _Tree(rows2, [shared[k] for k in c2], b)
    traces, leaf1 = t1.first_path()
    for leaf in t2.leaves(traces):
        g = _leaf_map(leaf1, leaf)
        if _is_iso(rows1, rows2, g):
            return tuple(g)
    return None
