"""Simple finite graphs stored as packed bit-rows.

Vertex ``v`` has its neighbourhood stored as the integer ``rows[v]`` whose bit
``w`` is set iff ``(v, w)`` is an edge.  Python integers give word-parallel
``&``, ``|`` and ``==`` on these rows for free, which is what the search and
census kernels spend their time on.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertices."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    allow_loops: bool = False
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references vertices >= {self.n}")
            if not self.allow_loops and (row >> v) & 1:
                raise GraphError(f"loop at vertex {v} in a simple graph")
            for w in bits(row):
                if not (self.rows[w] >> v) & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {w})")
        object.__setattr__(self, "_hash", hash((self.n, self.rows, self.allow_loops)))

    def __hash__(self) -> int:
        return self._hash

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], allow_loops: bool = False) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), allow_loops)

    @classmethod
    def from_adjacency(cls, adj, allow_loops: bool = False) -> "Graph":
        a = np.asarray(adj, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError("adjacency matrix must be square")
        n = a.shape[0]
        packed = np.packbits(a, axis=1, bitorder="little")
        rows = tuple(int.from_bytes(r.tobytes(), "little") for r in packed)
        return cls(n, rows, allow_loops)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    # -- basic queries ------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in range(self.n) for w in bits(self.rows[u]) if u <= w]

    def num_edges(self) -> int:
        return len(self.edges())

    def adjacency_matrix(self) -> np.ndarray:
        nbytes = (self.n + 7) // 8
        buf = np.frombuffer(b"".join(r.to_bytes(nbytes, "little") for r in self.rows), dtype=np.uint8)
        return np.unpackbits(buf.reshape(self.n, nbytes), axis=1, bitorder="little")[:, : self.n].astype(bool)

    def has_loops(self) -> bool:
        return any((r >> v) & 1 for v, r in enumerate(self.rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            rows[perm[v]] = image_mask(row, perm)
        return Graph(self.n, tuple(rows), self.allow_loops)


def image_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for w in bits(mask):
        out |= 1 << perm[w]
    return out


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    _check_vertex(g, v)
    return frozenset(bits(g.rows[v]))


def ball(g: Graph, v: int, r: int) -> frozenset[int]:
    _check_vertex(g, v)
    if r < 0:
        raise GraphError("radius must be non-negative")
    seen = 1 << v
    frontier = 1 << v
    for _ in range(r):
        nxt = 0
        for u in bits(frontier):
            nxt |= g.rows[u]
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
    return frozenset(bits(seen))


def is_reduced(g: Graph) -> bool:
    return len(set(g.rows)) == g.n


def components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for s in range(g.n):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def bipartition(g: Graph) -> list[int] | None:
    """Return a 0/1 colouring if ``g`` is bipartite, else ``None``."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in bits(g.rows[u]):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def complement(g: Graph) -> Graph:
    if g.allow_loops:
        raise GraphError("complement is only defined for loopless graphs")
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def square(g: Graph) -> Graph:
    """Vertices at the ends of a common 2-path become adjacent; no loops."""
    rows = []
    for v in range(g.n):
        acc = 0
        for u in bits(g.rows[v]):
            acc |= g.rows[u]
        rows.append(acc & ~(1 << v))
    return Graph(g.n, tuple(rows))


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs BFS distances as floats, ``inf`` for unreachable pairs."""
    d = np.full((g.n, g.n), math.inf)
    for s in range(g.n):
        d[s, s] = 0
        seen = 1 << s
        frontier = seen
        k = 0
        while frontier:
            k += 1
            nxt = 0
            for u in bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~seen
            seen |= frontier
            for w in bits(frontier):
                d[s, w] = k
    return d


def diameter(g: Graph) -> float:
    return float(distance_matrix(g).max())


def has_triangle(g: Graph) -> bool:
    return any(g.rows[u] & g.rows[w] for u, w in g.edges() if u != w)


def has_hexagon(g: Graph) -> bool:
    """True iff some 6 distinct vertices form a cycle (not necessarily induced)."""
    rows = g.rows
    for s in range(g.n):
        allowed = ((1 << g.n) - 1) & ~((1 << (s + 1)) - 1)
        # paths s - a - b - c - d - e with all vertices > s, closing e ~ s
        stack = [(w, 1 << w, 1) for w in bits(rows[s] & allowed)]
        while stack:
            v, used, length = stack.pop()
            if length == 5:
                if (rows[v] >> s) & 1:
                    return True
                continue
            for w in bits(rows[v] & allowed & ~used):
                stack.append((w, used | (1 << w), length + 1))
    return False


def has_nested_neighborhoods(g: Graph) -> bool:
    """True iff N(u) is a proper subset of N(v) for some pair u, v."""
    rows = g.rows
    for u in range(g.n):
        for v in range(g.n):
            if u != v and rows[u] != rows[v] and rows[u] & ~rows[v] == 0:
                return True
    return False


def induced_is_coclique(g: Graph, cell: Iterable[int]) -> bool:
    m = mask_of(cell)
    return all(g.rows[v] & m == 0 for v in bits(m))


@dataclass(frozen=True)
class VertexPartition:
    """Ordered cells covering ``0..n-1``; order is (cell key, smallest vertex)."""

    cells: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cells)

    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.cells)

    def cell_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.cells) for v in c}

    def is_prepartition_of(self, finer: Iterable[Iterable[int]]) -> bool:
        """Every block of ``finer`` lies inside a single cell of ``self``."""
        where = self.cell_of()
        return all(len({where[v] for v in block}) <= 1 for block in finer)

    @classmethod
    def from_keys(cls, keys: Sequence) -> "VertexPartition":
        groups: dict = {}
        for v, k in enumerate(keys):
            groups.setdefault(k, []).append(v)
        ordered = sorted(groups.items(), key=lambda kv: (kv[0], kv[1][0]))
        return cls(tuple(tuple(vs) for _, vs in ordered))
