"""Canonical double cover, two-fold projections and the gamma / alpha machinery."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .graph import (
    Graph,
    VertexPartition,
    ball,
    bits,
    complement,
    distance_matrix,
    has_hexagon,
    has_nested_neighborhoods,
    has_triangle,
    image_mask,
    induced_is_coclique,
    is_bipartite,
    is_connected,
    is_reduced,
    square,
)
from .perm import Permutation, PermGroup
from .search import Budget, automorphisms


class PreconditionError(ValueError):
    """An input does not meet an operation's stated precondition."""


class DomainError(ValueError):
    """A permutation is outside the group an operation is defined on."""


def double_cover(g: Graph) -> Graph:
    """B(g): vertex (v, b) has index v + b*n; edges only between the parts."""
    # a loop at v lifts to the edge (v,0)-(v,1), so loop graphs are accepted
    n = g.n
    rows = [g.rows[v] << n for v in range(n)] + [g.rows[v] for v in range(n)]
    return Graph(2 * n, tuple(rows))


def part_of(n: int, index: int) -> int:
    return index // n


def ne_refinement(g: Graph) -> tuple[VertexPartition, list[int]]:
    """Iterate Ne(f), starting from f = deg, until the cell count stops growing.

    Each round replaces the key of v by the sorted multiset of its neighbours'
    keys.  Keys are renamed to ranks every round, which preserves the
    partition and keeps them small.
    """
    keys = g.degrees()
    ncells = len(set(keys))
    while True:
        raw = [tuple(sorted(keys[w] for w in bits(g.rows[v]))) for v in range(g.n)]
        rank = {k: i for i, k in enumerate(sorted(set(raw)))}
        new = [rank[k] for k in raw]
        if len(rank) <= ncells:
            break
        keys, ncells = new, len(rank)
    return VertexPartition.from_keys(keys), keys


def induced_gamma(g: Graph, pi: Sequence[int]) -> Permutation | None:
    """gamma(pi) via neighbourhood hashing, or None when pi is not a two-fold projection."""
    where = {row: v for v, row in enumerate(g.rows)}
    if len(where) != g.n:
        raise PreconditionError("graph is not reduced")
    img = []
    for v in range(g.n):
        w = where.get(image_mask(g.rows[v], pi))
        if w is None:
            return None
        img.append(w)
    if len(set(img)) != g.n:
        return None
    return Permutation._trusted(img)


@dataclass(frozen=True)
class TwoFoldStructure:
    graph: Graph
    aut_pi: PermGroup
    gamma: dict
    aut: list
    im_alpha: frozenset
    ant: frozenset
    ant0: frozenset
    inst: int | None
    connected: bool
    bipartite: bool
    ne_partition: VertexPartition = field(repr=False, default=None)

    @property
    def elements(self) -> list[Permutation]:
        return self.aut_pi.elements

    def orbits(self) -> list[list[int]]:
        return self.aut_pi.orbits()


def aut_pi(g: Graph, budget: int | Budget | None = None) -> TwoFoldStructure:
    """Aut^pi(g) with gamma, via part-preserving automorphisms of B(g)."""
    if g.has_loops():
        raise PreconditionError("aut_pi needs a simple graph")
    if not is_reduced(g):
        raise PreconditionError("graph is not reduced")
    n = g.n
    part, keys = ne_refinement(g)
    bc = double_cover(g)
    colours = [(0, keys[v]) for v in range(n)] + [(1, keys[v]) for v in range(n)]
    gamma = {}
    for full in automorphisms(bc.rows, colours, budget):
        p = Permutation._trusted(full[:n])
        gamma[p] = Permutation._trusted(w - n for w in full[n:])
    elements = sorted(gamma)
    group = PermGroup.from_elements(n, elements)
    aut = [p for p in elements if gamma[p] == p]
    im_alpha = frozenset(p.inverse() * gamma[p] for p in elements)
    ant = frozenset(p for p in elements if gamma[p] == p.inverse())
    ant0 = frozenset(p for p in ant if not any((g.rows[v] >> p[v]) & 1 for v in range(n)))
    connected = is_connected(g)
    bip = is_bipartite(g)
    inst = len(elements) // len(aut) if connected and not bip else None
    return TwoFoldStructure(g, group, gamma, aut, im_alpha, ant, ant0, inst, connected, bip, part)


def gamma_of(tfs: TwoFoldStructure, pi: Sequence[int]) -> Permutation:
    try:
        return tfs.gamma[tuple(pi)]
    except KeyError as exc:
        raise DomainError("permutation is not a two-fold projection of this graph") from exc


def alpha_of(tfs: TwoFoldStructure, pi: Sequence[int]) -> Permutation:
    p = Permutation(pi)
    return p.inverse() * gamma_of(tfs, p)


def aut(g: Graph, budget: int | Budget | None = None) -> PermGroup:
    """Aut(g) for any graph (loops allowed)."""
    loops = [(g.rows[v] >> v) & 1 for v in range(g.n)]
    colours = [(d, lp) for d, lp in zip(g.degrees(), loops)]
    elements = [Permutation._trusted(p) for p in automorphisms(g.rows, colours, budget)]
    return PermGroup.from_elements(g.n, elements)


# -- stability -----------------------------------------------------------------


@dataclass(frozen=True)
class StabilityVerdict:
    kind: str  # "stable" | "unstable" | "trivially_unstable"
    reason: str | None
    inst: int | None

    def __str__(self) -> str:
        return self.kind if self.reason is None else f"{self.kind}({self.reason})"


def _trivial_reason(g: Graph) -> str | None:
    # reducedness is reported first: C4 is both bipartite and not reduced
    if not is_reduced(g):
        return "not reduced"
    if not is_connected(g):
        return "disconnected"
    if is_bipartite(g):
        return "bipartite"
    return None


def is_stable(g: Graph, tfs: TwoFoldStructure | None = None) -> StabilityVerdict:
    reason = _trivial_reason(g)
    if reason is not None:
        return StabilityVerdict("trivially_unstable", reason, None)
    tfs = tfs or aut_pi(g)
    if tfs.inst == 1:
        return StabilityVerdict("stable", None, 1)
    return StabilityVerdict("unstable", "Aut is a proper subgroup of Aut^pi", tfs.inst)


def stability_report(g: Graph, budget: int | Budget | None = None) -> dict:
    red = is_reduced(g)
    conn = is_connected(g)
    bip = is_bipartite(g)
    part, _ = ne_refinement(g)
    rep = {
        "n": g.n,
        "reduced": red,
        "connected": conn,
        "bipartite": bip,
        "aut_order": aut(g, budget).order(),
        "aut_pi_order": None,
        "inst": "not defined",
        "stable": None,
        "verdict": None,
        "ant_size": None,
        "ant0_size": None,
        "orbit_cells": [list(c) for c in part.cells],
    }
    tfs = None
    if red:
        tfs = aut_pi(g, budget)
        rep.update(aut_pi_order=tfs.aut_pi.order(), ant_size=len(tfs.ant), ant0_size=len(tfs.ant0), aut_pi_orbits=tfs.orbits())
        if tfs.inst is not None:
            rep["inst"] = tfs.inst
    verdict = is_stable(g, tfs)
    rep["verdict"] = str(verdict)
    rep["stable"] = verdict.kind == "stable"
    return rep


def stability_report_json(g: Graph, budget: int | Budget | None = None) -> str:
    return json.dumps(stability_report(g, budget), sort_keys=True)


# -- topological automorphisms ---------------------------------------------------


def aut_tau_structure(g: Graph, budget: int | Budget | None = None) -> TwoFoldStructure:
    """Aut^pi of the complement; its gamma is the ball-pairing of g."""
    c = complement(g)
    if not is_reduced(c):
        raise PreconditionError("complement is not reduced")
    return aut_pi(c, budget)


def aut_tau(g: Graph, budget: int | Budget | None = None) -> PermGroup:
    return aut_tau_structure(g, budget).aut_pi


def ball_theorem_failures(g: Graph, tau: TwoFoldStructure | None = None, r_max: int | None = None) -> list[tuple]:
    """Counterexamples (pi, v, r) to pi(B(v,r)) = B(gamma^r(pi)(v), r)."""
    tau = tau or aut_tau_structure(g)
    d = distance_matrix(g)
    finite = d[d != float("inf")]
    if r_max is None:
        r_max = max(int(finite.max()), 1)
    balls = {(v, r): ball(g, v, r) for v in range(g.n) for r in range(1, r_max + 1)}
    bad = []
    for p in tau.elements:
        gp = tau.gamma[p]
        for r in range(1, r_max + 1):
            q = gp if r % 2 else p
            for v in range(g.n):
                if frozenset(p[w] for w in balls[v, r]) != balls[q[v], r]:
                    bad.append((p, v, r))
    return bad


def _band(d: float) -> float:
    # distances 2n-1 and 2n share the band n; 0 is its own band, inf stays inf
    if d == 0 or d == float("inf"):
        return d
    return (int(d) + 1) // 2


def verify_distance_parity(g: Graph, pi: Sequence[int]) -> bool:
    d = distance_matrix(g)
    for v in range(g.n):
        for w in range(g.n):
            if _band(d[v, w]) != _band(d[pi[v], pi[w]]):
                return False
    return True


# -- the square -------------------------------------------------------------


@dataclass
class SquareReport:
    aut_pi_order: int
    aut_square_order: int
    contained: bool
    hypotheses: bool
    equal: bool | None

    @property
    def holds(self) -> bool:
        return self.contained and (self.equal is not False)

    def as_dict(self) -> dict:
        return dict(self.__dict__, holds=self.holds)


def square_subgroup_check(g: Graph, tfs: TwoFoldStructure | None = None, budget: int | Budget | None = None) -> SquareReport:
    """Aut^pi(g) <= Aut(g^2), with equality checked when g has no triangle,
    no 6-cycle and no nested neighbourhoods."""
    tfs = tfs or aut_pi(g, budget)
    sq = aut(square(g), budget)
    contained = all(p in sq for p in tfs.elements)
    hyp = not has_triangle(g) and not has_hexagon(g) and not has_nested_neighborhoods(g)
    equal = (sq.order() == tfs.aut_pi.order() and contained) if hyp else None
    return SquareReport(tfs.aut_pi.order(), sq.order(), contained, hyp, equal)


def orbit_cocliques(g: Graph, p: Sequence[int]) -> bool:
    """Every orbit of the cyclic group <p> induces a coclique."""
    return all(induced_is_coclique(g, c) for c in Permutation(p).cycles())
