"""TF-isomorphism: antimorphism action on adjacency matrices and the census.

Matrix convention: ``m_q`` has column ``i`` equal to ``e_{q(i)}``, so
``(A m_psi)[i][j] = A[i][psi(j)]``.  When the result is symmetric its row
``i`` is the neighbourhood ``N(psi(i))`` of the base graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .double_cover import PreconditionError, TwoFoldStructure, aut_pi, double_cover
from .graph import Graph, image_mask, induced_is_coclique, is_bipartite, is_connected, is_reduced
from .io import graph6_encode
from .perm import Permutation
from .search import Budget, isomorphism


class ActionRejected(ValueError):
    """``A m_psi`` is not the adjacency matrix of an admissible graph."""

    def __init__(self, reason: str, vertex: int):
        super().__init__(f"{reason} at vertex {vertex}")
        self.reason = reason
        self.vertex = vertex


def permutation_matrix_action(g: Graph, psi: Sequence[int], allow_loops: bool = False) -> Graph:
    """The graph with adjacency matrix ``A m_psi``.

    Raises ActionRejected with reason ``not-antimorphism`` when the matrix is
    not symmetric, or ``loop-at-v`` when it has a nonzero diagonal entry and
    loops are not allowed.
    """
    if g.has_loops():
        raise PreconditionError("base graph must be simple")
    if not is_reduced(g):
        raise PreconditionError("graph is not reduced")
    p = Permutation(psi)
    if len(p) != g.n:
        raise ValueError(f"permutation of degree {len(p)} for a graph on {g.n} vertices")
    pinv = p.inverse()
    rows = tuple(g.rows[p[i]] for i in range(g.n))
    for i in range(g.n):
        # column i of A m_psi is psi^-1(N(i)); symmetry needs it to equal row i
        if image_mask(g.rows[i], pinv) != rows[i]:
            raise ActionRejected("not-antimorphism", i)
    loops = [i for i in range(g.n) if (rows[i] >> i) & 1]
    if loops and not allow_loops:
        raise ActionRejected("loop-at-v", loops[0])
    return Graph(g.n, rows, allow_loops=bool(loops))


def tf_isomorphic(g1: Graph, g2: Graph, budget: int | Budget | None = None) -> Permutation | None:
    """A bijection carrying every neighbourhood of g1 onto one of g2, or None."""
    if g1.n != g2.n:
        return None
    n = g1.n
    b1, b2 = double_cover(g1), double_cover(g2)
    c1 = [(v // n, b1.degree(v)) for v in range(2 * n)]
    c2 = [(v // n, b2.degree(v)) for v in range(2 * n)]
    f = isomorphism(b1.rows, c1, b2.rows, c2, budget)
    if f is None:
        return None
    return Permutation._trusted(f[:n])


def twisted_gamma(tfs: TwoFoldStructure, psi: Permutation) -> dict:
    """gamma of the witness graph ``A m_psi``: phi_psi o gamma with phi_h(q) = h^-1 q h."""
    pinv = psi.inverse()
    return {p: pinv * gp * psi for p, gp in tfs.gamma.items()}


def twisted_im_alpha(tfs: TwoFoldStructure, psi: Permutation) -> frozenset:
    """Im(alpha) of the witness graph: {h^-1 psi^-1 gamma(h) psi}."""
    pinv = psi.inverse()
    return frozenset(h.inverse() * pinv * gh * psi for h, gh in tfs.gamma.items())


def twisted_fix_count(tfs: TwoFoldStructure, psi: Permutation) -> int:
    """|Aut| of the witness graph, as the fixed points of phi_psi o gamma."""
    return sum(1 for h, gh in tfs.gamma.items() if gh * psi == psi * h)


@dataclass
class CensusClass:
    rep_psi: Permutation
    members: frozenset
    inst: int
    aut_order: int
    witness: Graph | None = None

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class TfCensus:
    base: Graph
    tfs: TwoFoldStructure
    loops_included: bool
    classes: list[CensusClass]
    witnesses: dict = field(default_factory=dict)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def candidates(self) -> frozenset:
        return self.tfs.ant if self.loops_included else self.tfs.ant0

    def class_of(self, psi: Sequence[int]) -> int:
        key = tuple(psi)
        for i, c in enumerate(self.classes):
            if key in c.members:
                return i
        raise KeyError("permutation is not a census witness")


def _require_census_input(g: Graph) -> None:
    if g.has_loops():
        raise PreconditionError("census needs a simple graph")
    if not is_connected(g):
        raise PreconditionError("census needs a connected graph")
    if not is_reduced(g):
        raise PreconditionError("census needs a reduced graph")
    if is_bipartite(g):
        raise PreconditionError("census needs a nonbipartite graph")


def census(g: Graph, allow_loops: bool = False, keep_all: bool = False, tfs: TwoFoldStructure | None = None, budget: int | Budget | None = None) -> TfCensus:
    """Graphs TF-isomorphic to g, classified by the Im(alpha) criterion."""
    _require_census_input(g)
    tfs = tfs or aut_pi(g, budget)
    pool = tfs.ant if allow_loops else tfs.ant0
    remaining = set(pool)
    order = tfs.aut_pi.order()
    classes = []
    witnesses = {}
    for psi in sorted(pool):
        if psi not in remaining:
            continue
        im = twisted_im_alpha(tfs, psi)
        members = frozenset(psi * q for q in im)
        if not members <= remaining:
            raise AssertionError("census class overlaps a previous class or leaves the candidate set")
        remaining -= members
        fix = twisted_fix_count(tfs, psi)
        inst = order // fix
        if len(members) != inst:
            raise AssertionError(f"class size {len(members)} differs from witness inst {inst}")
        witness = permutation_matrix_action(g, psi, allow_loops)
        classes.append(CensusClass(psi, members, inst, fix, witness))
        if keep_all:
            for m in sorted(members):
                witnesses[m] = permutation_matrix_action(g, m, allow_loops)
    return TfCensus(g, tfs, allow_loops, classes, witnesses)


def strongly_switching_elements(g: Graph, tfs: TwoFoldStructure | None = None) -> frozenset:
    """x * Ant0 inside Aut^pi x| Z2, with elements written (h, b); x (psi, 0) = (gamma(psi), 1)."""
    _require_census_input(g)
    tfs = tfs or aut_pi(g)
    return frozenset((tfs.gamma[p], 1) for p in tfs.ant0)


def switching_conjugacy_classes(g: Graph, cen: TfCensus | None = None) -> list[frozenset]:
    """Conjugacy classes of strongly switching elements, read off the census classes."""
    cen = cen or census(g)
    if cen.loops_included:
        raise ValueError("switching classes are defined on the loopless census")
    gam = cen.tfs.gamma
    return [frozenset((gam[p], 1) for p in c.members) for c in cen.classes]


def empty_orbit_check(g: Graph, psi: Sequence[int]) -> bool:
    """Every orbit of psi induces a coclique in g."""
    return all(induced_is_coclique(g, c) for c in Permutation(psi).cycles())


@dataclass
class IdentityReport:
    ant0_size: int
    sum_inst: int
    harmonic_lhs: Fraction
    harmonic_rhs: Fraction
    ant_size: int
    sum_inst_loops: int
    harmonic_lhs_loops: Fraction
    harmonic_rhs_loops: Fraction
    mean_aut: Fraction
    class_count: int
    question_aut: int
    question_tf_count: int

    @property
    def ok(self) -> bool:
        return (
            self.ant0_size == self.sum_inst
            and self.harmonic_lhs == self.harmonic_rhs
            and self.ant_size == self.sum_inst_loops
            and self.harmonic_lhs_loops == self.harmonic_rhs_loops
            and self.mean_aut >= self.class_count
        )

    def as_dict(self) -> dict:
        return {
            "loopless": {"lhs": self.ant0_size, "rhs": self.sum_inst, "harmonic_lhs": str(self.harmonic_lhs), "harmonic_rhs": str(self.harmonic_rhs)},
            "loops": {"lhs": self.ant_size, "rhs": self.sum_inst_loops, "harmonic_lhs": str(self.harmonic_lhs_loops), "harmonic_rhs": str(self.harmonic_rhs_loops)},
            "mean_aut_vs_class_count": {"mean_aut": str(self.mean_aut), "class_count": self.class_count},
            # reported side by side, never asserted
            "question": {"aut_order": self.question_aut, "tf_class_count": self.question_tf_count},
            "ok": self.ok,
        }


def verify_identities(g: Graph, tfs: TwoFoldStructure | None = None, strict: bool = True) -> IdentityReport:
    """Both counting identities, loopless and with loops, in exact arithmetic."""
    tfs = tfs or aut_pi(g)
    plain = census(g, False, tfs=tfs)
    looped = census(g, True, tfs=tfs)
    order = tfs.aut_pi.order()
    mean_aut = Fraction(sum(c.aut_order for c in plain.classes), plain.class_count)
    rep = IdentityReport(
        ant0_size=len(tfs.ant0),
        sum_inst=sum(c.inst for c in plain.classes),
        harmonic_lhs=Fraction(len(tfs.ant0), order),
        harmonic_rhs=sum((Fraction(1, c.aut_order) for c in plain.classes), Fraction(0)),
        ant_size=len(tfs.ant),
        sum_inst_loops=sum(c.inst for c in looped.classes),
        harmonic_lhs_loops=Fraction(len(tfs.ant), order),
        harmonic_rhs_loops=sum((Fraction(1, c.aut_order) for c in looped.classes), Fraction(0)),
        mean_aut=mean_aut,
        class_count=plain.class_count,
        question_aut=len(tfs.aut),
        question_tf_count=plain.class_count,
    )
    if strict and not rep.ok:
        raise AssertionError(f"counting identity violated: {rep.as_dict()}")
    return rep


def census_report(cen: TfCensus, identities: IdentityReport | None = None, include_witnesses: bool = True) -> dict:
    d = {
        "base_graph6": graph6_encode(cen.base),
        "loops_included": cen.loops_included,
        "ant_size": len(cen.tfs.ant),
        "ant0_size": len(cen.tfs.ant0),
        "class_count": cen.class_count,
        "classes": [],
    }
    for c in cen.classes:
        entry = {"rep_psi": c.rep_psi.cycle_notation(), "inst": c.inst, "size": c.size, "aut_order": c.aut_order}
        if include_witnesses and c.witness is not None and not c.witness.has_loops():
            entry["witness_graph6"] = graph6_encode(c.witness)
        d["classes"].append(entry)
    if cen.witnesses:
        d["all_witnesses"] = {Permutation(k).cycle_notation(): graph6_encode(w) for k, w in cen.witnesses.items() if not w.has_loops()}
    if identities is not None:
        d["identities"] = {"lhs": identities.ant0_size, "rhs": identities.sum_inst, "ok": identities.ok, "detail": identities.as_dict()}
    return d


def census_json(cen: TfCensus, identities: IdentityReport | None = None) -> str:
    return json.dumps(census_report(cen, identities), sort_keys=True)


# -- group-level census for Cayley graphs on Z2^k --------------------------------


@dataclass
class TranslationCensus:
    k: int
    connection_set: frozenset
    ant_size: int
    ant0_size: int
    class_count: int
    class_sizes_all_one: bool

    def as_dict(self) -> dict:
        return {
            "group": f"Z2^:{self.k}",
            "connection_set_size": len(self.connection_set),
            "ant_size": self.ant_size,
            "ant0_size": self.ant0_size,
            "class_count": self.class_count,
            "identities": {"lhs": self.ant0_size, "rhs": self.class_count, "ok": self.ant0_size == self.class_count},
        }


def translation_census(k: int, connection_set: Sequence[int]) -> TranslationCensus:
    """Census of Cay(Z2^k, S) when Aut^pi is exactly the translation group.

    Then gamma is trivial, every translation t_g is an antimorphism, t_g is in
    Ant0 iff g is not in S, and Im(alpha) twisted by any translation is {0}, so
    every class is a singleton.  The premise must be certified separately (the
    GRR theorem plus the asymmetric local graph).
    """
    s = frozenset(int(x) for x in connection_set)
    m = 1 << k
    if any(not 0 <= x < m for x in s):
        raise ValueError("connection set element outside Z2^k")
    ant0 = [g for g in range(m) if g not in s]
    # twisted alpha: h -> h^-1 psi^-1 gamma(h) psi = h ^ psi ^ h ^ psi = 0
    im_alpha = frozenset({0})
    classes = {frozenset(g ^ a for a in im_alpha) for g in ant0}
    return TranslationCensus(k, s, m, len(ant0), len(classes), all(len(c) == 1 for c in classes))
