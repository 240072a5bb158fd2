"""Brute-force references over Sym(V) for small graphs (n <= 9 unless a larger cap is passed).

Everything here is deliberately literal: permutations are enumerated in
lexicographic order by depth-first assignment and pruned as soon as an
already-assigned neighbourhood fails its defining condition.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .graph import Graph, image_mask, is_bipartite, is_connected, is_reduced
from .perm import Permutation, PermGroup, ResourceError

ORACLE_MAX_N = 9


def _check_size(n: int, cap: int = ORACLE_MAX_N) -> None:
    if n > cap:
        raise ResourceError(f"oracle limited to n <= {cap}")


def _dfs(n: int, ok: Callable[[list[int], int], bool]) -> Iterator[tuple[int, ...]]:
    """Permutations p (lexicographic) such that ok(p, t) holds after each assignment p[t]."""
    p: list[int] = []
    used = [False] * n

    def rec():
        t = len(p)
        if t == n:
            yield tuple(p)
            return
        for c in range(n):
            if used[c]:
                continue
            p.append(c)
            used[c] = True
            if ok(p, t):
                yield from rec()
            used[c] = False
            p.pop()

    yield from rec()


def _adj(g: Graph, u: int, v: int) -> int:
    return (g.rows[u] >> v) & 1


def brute_aut(g: Graph, cap: int = ORACLE_MAX_N) -> PermGroup:
    _check_size(g.n, cap)

    def ok(p, t):
        return all(_adj(g, u, t) == _adj(g, p[u], p[t]) for u in range(t + 1))

    return PermGroup.from_elements(g.n, [Permutation._trusted(p) for p in _dfs(g.n, ok)])


def _nbh_prefix_ok(g: Graph, targets: set[int], p: list[int], t: int) -> bool:
    # N(v) becomes fully assigned when its largest member t is assigned;
    # from then on its image must be a neighbourhood
    for row in g.rows:
        if row and row.bit_length() - 1 == t and image_mask(row, p) not in targets:
            return False
    return True


@dataclass
class BruteTwoFold:
    elements: list
    gamma: dict

    @property
    def group(self) -> PermGroup:
        return PermGroup.from_elements(len(self.elements[0]), self.elements)


def brute_aut_pi(g: Graph, cap: int = ORACLE_MAX_N) -> BruteTwoFold:
    """Every pi in Sym(V) with pi(N(v)) in N(g) for all v, and its gamma."""
    _check_size(g.n, cap)
    if not is_reduced(g):
        raise ValueError("graph is not reduced")
    targets = set(g.rows)
    where = {row: v for v, row in enumerate(g.rows)}
    elements = []
    gamma = {}
    for p in _dfs(g.n, lambda p, t: _nbh_prefix_ok(g, targets, p, t)):
        imgs = [image_mask(g.rows[v], p) for v in range(g.n)]
        if all(m in targets for m in imgs):
            q = Permutation._trusted(p)
            elements.append(q)
            gamma[q] = Permutation._trusted(where[m] for m in imgs)
    return BruteTwoFold(elements, gamma)


def brute_iso(g1: Graph, g2: Graph, cap: int = ORACLE_MAX_N) -> bool:
    _check_size(max(g1.n, g2.n), cap)
    if g1.n != g2.n or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False

    def ok(p, t):
        return all(_adj(g1, u, t) == _adj(g2, p[u], p[t]) for u in range(t + 1))

    return next(_dfs(g1.n, ok), None) is not None


def brute_ant(g: Graph, loops: bool = False, cap: int = ORACLE_MAX_N) -> list[Permutation]:
    """psi with A m_psi symmetric (and zero-diagonal unless loops), by direct matrix test."""
    _check_size(g.n, cap)

    def ok(p, t):
        # entry (i, j) of A m_psi is A[i][psi(j)]
        if not loops and _adj(g, t, p[t]):
            return False
        return all(_adj(g, i, p[t]) == _adj(g, t, p[i]) for i in range(t + 1))

    return [Permutation._trusted(p) for p in _dfs(g.n, ok)]


def matrix_graph(g: Graph, psi) -> Graph:
    """The graph with adjacency matrix A m_psi, built entrywise."""
    n = g.n
    edges = [(i, j) for i in range(n) for j in range(i, n) if _adj(g, i, psi[j])]
    return Graph.from_edges(n, edges, allow_loops=any(i == j for i, j in edges))


@dataclass
class BruteCensus:
    classes: list[frozenset]
    witnesses: dict
    inst: list[int]


def brute_census(g: Graph, cap: int = ORACLE_MAX_N) -> BruteCensus:
    """Loopless census with classes from pairwise brute_iso."""
    _check_size(g.n, cap)
    if not (is_connected(g) and is_reduced(g) and not is_bipartite(g)):
        raise ValueError("census needs a connected, reduced, nonbipartite graph")
    ant0 = brute_ant(g, cap=cap)
    witnesses = {p: matrix_graph(g, p) for p in ant0}
    reps: list[Permutation] = []
    members: list[set] = []
    for p in ant0:
        for i, r in enumerate(reps):
            if brute_iso(witnesses[r], witnesses[p], cap):
                members[i].add(p)
                break
        else:
            reps.append(p)
            members.append({p})
    inst = []
    for r in reps:
        w = witnesses[r]
        inst.append(len(brute_aut_pi(w, cap).elements) // brute_aut(w, cap).order())
    return BruteCensus([frozenset(m) for m in members], witnesses, inst)


# -- corpora -------------------------------------------------------------------


def corpus(n_max: int = 7, n_min: int = 1) -> list[Graph]:
    """All graphs with n_min <= n <= n_max up to isomorphism (graph atlas, n <= 7)."""
    if n_max > 7:
        raise ValueError("the atlas corpus covers n <= 7")
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for h in graph_atlas_g():
        n = h.number_of_nodes()
        if n_min <= n <= n_max:
            out.append(Graph.from_edges(n, list(h.edges())))
    return out


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_reduced_graphs(count: int, sizes=(8, 9), seed: int = 0) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_graph(rng.choice(sizes), rng, rng.choice((0.3, 0.5, 0.7)))
        if is_reduced(g):
            out.append(g)
    return out
