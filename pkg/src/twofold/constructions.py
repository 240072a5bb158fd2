"""Graph families: the rigid skeleton R(n0), (H, sigma)-graphs, generalized
Cayley graphs, achievability graphs, M(k), M0(k) and the Z2^k GRR family.

Product constructions use the cell-contiguous index ``(i - 1)*|H| + h`` for
vertex ``(h, i)``, with ``i`` 1-based as in the labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, mask_of
from .groups import FiniteGroup, GroupAutomorphism, SemidirectZ2, rank, s_set, tf_classes
from .perm import Permutation


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[str, ...]
    meta: tuple = ()

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.n:
            raise ConstructionError("one label per vertex is required")
        if len(set(self.labels)) != len(self.labels):
            raise ConstructionError("labels must be unique")

    @property
    def n(self) -> int:
        return self.graph.n

    def info(self) -> dict:
        return dict(self.meta)

    def labels_json(self) -> str:
        return json.dumps({"labels": list(self.labels), **self.info()})


# -- R(n0) ---------------------------------------------------------------------


def skeleton_edges(n0: int) -> list[tuple[int, int]]:
    """Edges of R(n0) in 1-based labels.

    The joins to n0+1 and n0+2 run over 1..n0 (not 1..n0-1): the stated
    degrees deg(n0+1) = n0+1, deg(n0) = 3 and the connectivity path through
    (n0, n0+1) all need vertex n0 included.
    """
    if n0 < 6:
        raise ConstructionError("R(n0) needs n0 >= 6")
    e1 = [(i, i + 1) for i in range(1, n0)] + [(2, 4)]
    e2 = [(i, n0 + t) for i in range(1, n0 + 1) for t in (1, 2)]
    e3 = [(n0 + i, n0 + i + 1) for i in range(1, 6)] + [(n0 + 2, n0 + 4), (n0 + 2, n0 + 6), (n0 + 4, n0 + 6)]
    return sorted({tuple(sorted(e)) for e in e1 + e2 + e3})


def skeleton_r(n0: int) -> LabeledGraph:
    edges = skeleton_edges(n0)
    g = Graph.from_edges(n0 + 6, [(a - 1, b - 1) for a, b in edges])
    return LabeledGraph(g, tuple(str(i) for i in range(1, n0 + 7)), (("family", "r-skeleton"), ("n0", n0)))


# -- (H, sigma)-graphs -------------------------------------------------------------


def _check_generating(h: FiniteGroup, x: Sequence[int]) -> None:
    if len(h.generated(x)) != h.order:
        raise ConstructionError("X does not generate H")


def _vertex(order: int, hh: int, i: int) -> int:
    return (i - 1) * order + hh


def _product_labels(h: FiniteGroup, cells: int) -> tuple[str, ...]:
    return tuple(f"({h.labels[a]},{i})" for i in range(1, cells + 1) for a in range(h.order))


def gamma_edges(h: FiniteGroup, sigma: GroupAutomorphism, x: Sequence[int]) -> tuple[int, list[tuple[int, int]]]:
    """n0 and the edge list of Gamma_{(H,sigma),X} in vertex indices."""
    r = len(x)
    n0 = 1 + max(r, 5)
    m = h.order
    hub = n0 + 1
    edges = []
    for a, b in skeleton_edges(n0):
        if hub in (a, b):
            i = b if a == hub else a
            for h1 in range(m):
                h2 = h.mul(sigma(h1), x[i - 1]) if i <= r else sigma(h1)
                edges.append((_vertex(m, h1, i), _vertex(m, h2, hub)))
        else:
            for h1 in range(m):
                edges.append((_vertex(m, h1, a), _vertex(m, sigma(h1), b)))
    return n0, edges


def gamma_construction(h: FiniteGroup, sigma: GroupAutomorphism, x: Sequence[int] | None = None) -> LabeledGraph:
    """Gamma_{(H,sigma),X}; X defaults to the lexicographically first minimal generating set."""
    if sigma.base is not h:
        raise ConstructionError("sigma belongs to a different group")
    if x is None:
        _, x = rank(h)
    x = tuple(x)
    _check_generating(h, x)
    n0, edges = gamma_edges(h, sigma, x)
    g = Graph.from_edges(h.order * (n0 + 6), edges)
    meta = (("family", "hsigma"), ("group", h.name), ("sigma", sigma.name), ("X", list(x)), ("n0", n0), ("cells", n0 + 6))
    return LabeledGraph(g, _product_labels(h, n0 + 6), meta)


def translation(h: FiniteGroup, cells: int, a: int) -> Permutation:
    """Left translation (h0, i) -> (a h0, i) on a cell-contiguous product graph."""
    m = h.order
    return Permutation._trusted((i * m + h.mul(a, b)) for i in range(cells) for b in range(m))


def translation_element(h: FiniteGroup, p: Sequence[int]) -> int | None:
    """The a with p = translation by a, or None if p is not a translation."""
    a = p[0] % h.order
    cells = len(p) // h.order
    return a if tuple(p) == tuple(translation(h, cells, a)) else None


# -- generalized Cayley graphs ---------------------------------------------------


def alpha_image(h: FiniteGroup, sigma: GroupAutomorphism) -> frozenset[int]:
    """{a^-1 sigma(a)}: connection-set elements that would create loops."""
    return frozenset(h.mul(h.inv(a), sigma(a)) for a in range(h.order))


def check_gcay_set(h: FiniteGroup, sigma: GroupAutomorphism, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(int(a) for a in s)
    if any(not 0 <= a < h.order for a in s):
        raise ConstructionError("connection set element out of range")
    swapped = frozenset(h.inv(sigma(a)) for a in s)
    if swapped != s:
        raise ConstructionError("connection set violates S = sigma(S)^-1")
    bad = s & alpha_image(h, sigma)
    if bad:
        raise ConstructionError(f"connection set meets {{h^-1 sigma(h)}} at {sorted(bad)}; the graph would have loops")
    return s


def gcay_edges(h: FiniteGroup, sigma: GroupAutomorphism, s: frozenset[int]) -> list[tuple[int, int]]:
    return [(a, b) for a in range(h.order) for b in range(a + 1, h.order) if h.mul(h.inv(a), sigma(b)) in s]


def gcay(h: FiniteGroup, sigma: GroupAutomorphism, s: Iterable[int]) -> LabeledGraph:
    s = check_gcay_set(h, sigma, s)
    g = Graph.from_edges(h.order, gcay_edges(h, sigma, s))
    return LabeledGraph(g, tuple(h.labels), (("family", "gcay"), ("group", h.name), ("sigma", sigma.name), ("S", sorted(s))))


def cayley(h: FiniteGroup, s: Iterable[int]) -> LabeledGraph:
    s = frozenset(int(a) for a in s)
    if h.identity in s:
        raise ConstructionError("identity in connection set")
    if frozenset(h.inv(a) for a in s) != s:
        raise ConstructionError("connection set is not closed under inverses")
    edges = [(a, b) for a in range(h.order) for b in range(a + 1, h.order) if h.mul(h.inv(a), b) in s]
    return LabeledGraph(Graph.from_edges(h.order, edges), tuple(h.labels), (("family", "cayley"), ("group", h.name), ("S", sorted(s))))


# -- achievability ------------------------------------------------------------


def check_class_union(h: FiniteGroup, sigma: GroupAutomorphism, c: Iterable[int]) -> frozenset[int]:
    """Validate that C is a union of classes inside S(H,sigma) containing x."""
    c = frozenset(c)
    sd = SemidirectZ2(h, sigma)
    if not c <= frozenset(s_set(h, sigma)):
        raise ConstructionError("C is not contained in S(H, sigma)")
    if sd.x not in c:
        raise ConstructionError("C must contain the class of x")
    for cls in tf_classes(h, sigma):
        if cls & c and not cls <= c:
            raise ConstructionError("C is not a union of conjugacy classes")
    return c


def achievable_connection_set(h: FiniteGroup, sigma: GroupAutomorphism, c: Iterable[int]) -> frozenset[int]:
    """S = x (S(H,sigma) minus C) read inside H; x h corresponds to (sigma(h), 1)."""
    c = check_class_union(h, sigma, c)
    sd = SemidirectZ2(h, sigma)
    rest = [sd.pair(g)[0] for g in s_set(h, sigma) if g not in c]
    # (k, 1) = x h with sigma(h) = k, and sigma(k) = k^-1 on S(H, sigma), so h = k^-1
    return frozenset(h.inv(k) for k in rest)


def achievable_construction(h: FiniteGroup, sigma: GroupAutomorphism, c: Iterable[int], x: Sequence[int] | None = None) -> LabeledGraph:
    s = achievable_connection_set(h, sigma, c)
    base = gamma_construction(h, sigma, x)
    meta = dict(base.meta)
    n0 = meta["n0"]
    s = check_gcay_set(h, sigma, s)
    m = h.order
    extra = [(_vertex(m, a, n0 + 2), _vertex(m, b, n0 + 2)) for a, b in gcay_edges(h, sigma, s)]
    g = Graph.from_edges(base.n, base.graph.edges() + extra)
    meta.update(family="achieve", C=sorted(int(v) for v in frozenset(c)), S=sorted(s))
    return LabeledGraph(g, base.labels, tuple(meta.items()))


# -- M(k), M0(k) and the GRR family ------------------------------------------------


def _check_k(k: int) -> None:
    if k < 13:
        raise ConstructionError("the GRR family needs k >= 13")


def m_edges(k: int) -> list[tuple[int, int]]:
    """Edges of M(k), 1-based.

    (4,5) is included: the stated edge count k+2, |S| = 2k+2 and the degree-10
    vertex (4,5) of M0(k) all require it.
    """
    _check_k(k)
    e1 = [(1, 2), (1, 3), (2, 4), (3, 5), (4, 5), (4, 7), (5, 6), (6, 8), (7, 8), (7, 9), (8, 10), (9, k)]
    e2 = [(i, i + 1) for i in range(10, k)]
    return sorted({tuple(sorted(e)) for e in e1 + e2})


def m_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(a - 1, b - 1) for a, b in m_edges(k)])


def m0_vertices(k: int) -> list[tuple[int, int]]:
    """(1,1), ..., (k,k) followed by the edges of M(k) in sorted order."""
    return [(i, i) for i in range(1, k + 1)] + m_edges(k)


def m0_graph(k: int) -> Graph:
    verts = m0_vertices(k)
    idx = {v: t for t, v in enumerate(verts)}
    medges = set(m_edges(k))
    adj = {i: set() for i in range(1, k + 1)}
    for a, b in medges:
        adj[a].add(b)
        adj[b].add(a)
    edges = set()
    diag = [(i, i) for i in range(1, k + 1)]
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            if adj[i] & adj[j]:
                edges.add((idx[i, i], idx[j, j]))
    for i, _ in diag:
        for e in medges:
            m, n = e
            if i in e or m in adj[i] or n in adj[i]:
                edges.add((idx[i, i], idx[e]))
    elist = sorted(medges)
    for s, e in enumerate(elist):
        for f in elist[s + 1:]:
            if set(e) & set(f):
                edges.add((idx[e], idx[f]))
    return Graph.from_edges(len(verts), sorted(edges))


def m0_labels(k: int) -> tuple[str, ...]:
    return tuple(f"({a},{b})" for a, b in m0_vertices(k))


def grr_connection_set(k: int) -> list[int]:
    """x_i = 1 << (i-1), then x_i x_j for edges (i, j) of M(k); same order as m0_vertices."""
    return [1 << (i - 1) for i in range(1, k + 1)] + [(1 << (a - 1)) | (1 << (b - 1)) for a, b in m_edges(k)]


def xor_cayley(k: int, s: Iterable[int]) -> Graph:
    s = list(s)
    size = 1 << k
    if 0 in s or any(not 0 < a < size for a in s):
        raise ConstructionError("connection set must avoid 0 and lie in Z2^k")
    rows = []
    for v in range(size):
        rows.append(mask_of(v ^ a for a in s))
    return Graph(size, tuple(rows))


def grr_z2k(k: int) -> LabeledGraph:
    s = grr_connection_set(k)
    g = xor_cayley(k, s)
    labels = tuple(format(v, f"0{k}b") for v in range(1 << k))
    return LabeledGraph(g, labels, (("family", "grr-z2k"), ("k", k), ("S", s)))


def local_graph_of(s: Sequence[int]) -> Graph:
    """u ~ v on S iff more than two ordered pairs (s1, s2) in S x S have s1 ^ s2 = u ^ v."""
    s = list(s)
    counts: dict[int, int] = {}
    for a in s:
        for b in s:
            counts[a ^ b] = counts.get(a ^ b, 0) + 1
    edges = [(p, q) for p in range(len(s)) for q in range(p + 1, len(s)) if counts.get(s[p] ^ s[q], 0) > 2]
    return Graph.from_edges(len(s), edges)


def local_graph(k: int) -> Graph:
    _check_k(k)
    return local_graph_of(grr_connection_set(k))


def detect_xor_cayley(g: Graph) -> tuple[int, list[int]] | None:
    """(k, S) when g on 2^k vertices equals Cay(Z2^k, S) under its own labelling."""
    n = g.n
    if n < 2 or n & (n - 1):
        return None
    k = n.bit_length() - 1
    s = [w for w in range(n) if g.has_edge(0, w)]
    for v in range(n):
        if g.rows[v] != mask_of(v ^ a for a in s):
            return None
    return k, s


# -- name dispatch used by the CLI -------------------------------------------------

FAMILIES = ("r-skeleton", "hsigma", "gcay", "achieve", "m", "m0", "grr-z2k", "cayley")


def parse_int_set(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(t) for t in text.replace(";", ",").split(",") if t.strip()]

