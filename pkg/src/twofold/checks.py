"""Per-graph property checks returning replayable counterexamples.

Each check takes a graph and returns a list of failure dicts; an empty list
means the property holds.  Failures carry the graph6 string and, when one is
involved, the offending permutation, so they can be replayed offline.
"""

from __future__ import annotations

import random
from typing import Callable, Iterable

from .constructions import (
    LabeledGraph,
    gamma_construction,
    translation,
    translation_element,
)
from .double_cover import (
    TwoFoldStructure,
    aut,
    aut_pi,
    aut_tau_structure,
    ball_theorem_failures,
    square_subgroup_check,
    verify_distance_parity,
)
from .graph import (
    Graph,
    complement,
    diameter,
    induced_is_coclique,
    is_bipartite,
    is_connected,
    is_reduced,
)
from .groups import FiniteGroup, GroupAutomorphism, rank
from .io import graph6_encode
from .oracle import brute_aut, brute_aut_pi, brute_census, random_graph
from .tf_iso import census, verify_identities


def failure(g: Graph, check: str, perm: Iterable[int] | None = None, **detail) -> dict:
    d = {"check": check, "graph6": graph6_encode(g)}
    if perm is not None:
        d["permutation"] = list(perm)
    if detail:
        d["detail"] = {k: (v if isinstance(v, (int, str, bool, list, type(None))) else str(v)) for k, v in detail.items()}
    return d


def check_gamma(g: Graph, tfs: TwoFoldStructure | None = None) -> list[dict]:
    """gamma is an involution fixing exactly Aut, the edge relation holds, alpha
    is constant exactly on right Aut-cosets and Im(alpha) orbits are cocliques."""
    tfs = tfs or aut_pi(g)
    out = []
    gam = tfs.gamma
    n = g.n
    for p in tfs.elements:
        if gam[gam[p]] != p:
            out.append(failure(g, "gamma-involution", p))
        q = gam[p]
        for v in range(n):
            for w in range(n):
                if g.has_edge(v, w) != g.has_edge(p[v], q[w]):
                    out.append(failure(g, "edge-relation", p, v=v, w=w))
                    break
            else:
                continue
            break
    fix = sorted(p for p in tfs.elements if gam[p] == p)
    if fix != sorted(aut(g).elements):
        out.append(failure(g, "fix-gamma-is-aut"))
    autset = list(fix)
    fibres: dict = {}
    for p in tfs.elements:
        fibres.setdefault(p.inverse() * gam[p], set()).add(p)
    for value, fibre in fibres.items():
        p = min(fibre)
        coset = {a * p for a in autset}
        if coset != fibre:
            out.append(failure(g, "alpha-cosets", p))
        for cyc in value.cycles():
            if not induced_is_coclique(g, cyc):
                out.append(failure(g, "im-alpha-coclique", value))
                break
    return out


def check_parity(g: Graph, tfs: TwoFoldStructure | None = None) -> list[dict]:
    tfs = tfs or aut_pi(g)
    a, b = len(tfs.aut), tfs.aut_pi.order()
    if (a % 2 == 0) != (b % 2 == 0):
        return [failure(g, "parity", aut_order=a, aut_pi_order=b)]
    return []


def check_square(g: Graph, tfs: TwoFoldStructure | None = None) -> list[dict]:
    rep = square_subgroup_check(g, tfs)
    if rep.holds:
        return []
    return [failure(g, "square", **rep.as_dict())]


def check_balls(g: Graph) -> list[dict]:
    """Ball pairing under Aut^tau and distance-parity preservation, up to the diameter."""
    tau = aut_tau_structure(g)
    d = diameter(g)
    r_max = max(int(d), 1) if d != float("inf") else None
    out = [failure(g, "ball", p, v=v, r=r) for p, v, r in ball_theorem_failures(g, tau, r_max)]
    for p in tau.elements:
        if not verify_distance_parity(g, p):
            out.append(failure(g, "distance-parity", p))
    return out


def check_identities(g: Graph, tfs: TwoFoldStructure | None = None) -> list[dict]:
    tfs = tfs or aut_pi(g)
    rep = verify_identities(g, tfs, strict=False)
    out = [] if rep.ok else [failure(g, "identities", **{k: str(v) for k, v in rep.as_dict().items()})]
    cen = census(g, tfs=tfs)
    for c in cen.classes:
        if c.size != c.inst:
            out.append(failure(g, "class-size-is-inst", c.rep_psi, size=c.size, inst=c.inst))
    return out


def check_oracle(g: Graph) -> list[dict]:
    """Fast paths agree exactly with the brute-force references."""
    out = []
    if sorted(aut(g).elements) != sorted(brute_aut(g).elements):
        out.append(failure(g, "oracle-aut"))
    if not is_reduced(g) or g.n == 0:
        return out
    tfs = aut_pi(g)
    ref = brute_aut_pi(g)
    if sorted(tfs.elements) != sorted(ref.elements):
        out.append(failure(g, "oracle-aut-pi"))
    else:
        for p in ref.elements:
            if tfs.gamma[p] != ref.gamma[p]:
                out.append(failure(g, "oracle-gamma", p))
                break
    if is_connected(g) and not is_bipartite(g):
        mine = sorted(sorted(c.members) for c in census(g, tfs=tfs).classes)
        theirs = sorted(sorted(c) for c in brute_census(g).classes)
        if mine != theirs:
            out.append(failure(g, "oracle-census"))
    return out


SUITES: dict[str, Callable[[Graph], list[dict]]] = {
    "gamma": check_gamma,
    "parity": check_parity,
    "square": check_square,
    "balls": check_balls,
    "identities": check_identities,
    "oracle-sweep": check_oracle,
}


def applicable(suite: str, g: Graph) -> bool:
    """Whether a suite's preconditions hold for g."""
    if suite in ("gamma", "parity", "square"):
        return g.n > 0 and is_reduced(g)
    if suite == "identities":
        return g.n > 0 and is_reduced(g) and is_connected(g) and not is_bipartite(g)
    if suite == "balls":
        return g.n > 0 and is_connected(g) and is_reduced(complement(g))
    return g.n > 0


def random_ball_graphs(count: int, seed: int = 0, n_range=(4, 8)) -> list[Graph]:
    """Random connected graphs whose complements are reduced."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_graph(rng.randint(*n_range), rng, rng.choice((0.3, 0.5, 0.7)))
        if is_connected(g) and is_reduced(complement(g)):
            out.append(g)
    return out


# -- the (H, sigma) construction --------------------------------------------------


def check_construction(h: FiniteGroup, sigma: GroupAutomorphism, lg: LabeledGraph | None = None) -> list[dict]:
    """Vertex count, structural flags, Aut^pi = H acting by translation with gamma = sigma,
    and orbit cells H x {i} inducing cocliques."""
    lg = lg or gamma_construction(h, sigma)
    g = lg.graph
    out = []
    r = rank(h)[0]
    cells = 7 + max(r, 5)
    if g.n != h.order * cells:
        out.append(failure(g, "vertex-count", expected=h.order * cells, got=g.n))
    if not (is_reduced(g) and is_connected(g) and not is_bipartite(g)):
        out.append(failure(g, "reduced-connected-nonbipartite"))
        return out
    tfs = aut_pi(g)
    if tfs.aut_pi.order() != h.order:
        out.append(failure(g, "aut-pi-order", expected=h.order, got=tfs.aut_pi.order()))
    for a in h.elements():
        t = translation(h, cells, a)
        if t not in tfs.gamma:
            out.append(failure(g, "translation-missing", t, element=a))
            continue
        if translation_element(h, tfs.gamma[t]) != sigma(a):
            out.append(failure(g, "gamma-is-sigma", t, element=a))
    for i in range(cells):
        cell = range(i * h.order, (i + 1) * h.order)
        if not induced_is_coclique(g, cell):
            out.append(failure(g, "cell-coclique", cell=i))
    orbits = sorted(sorted(o) for o in tfs.orbits())
    if orbits != [list(range(i * h.order, (i + 1) * h.order)) for i in range(cells)]:
        out.append(failure(g, "orbit-cells"))
    return out


def sweep(check: Callable[[Graph], list[dict]], graphs: Iterable[Graph], stop_at_first: bool = True) -> tuple[int, list[dict]]:
    """Run a check over graphs in order; the first failure is minimal for an n-sorted corpus."""
    count = 0
    failures: list[dict] = []
    for g in graphs:
        count += 1
        f = check(g)
        if f:
            failures.extend(f)
            if stop_at_first:
                break
    return count, failures


def replay(entry: dict) -> list[dict]:
    """Rerun the check named in a counterexample dump."""
    from .io import graph6_decode

    g = graph6_decode(entry["graph6"])
    suite = entry.get("suite") or entry["check"]
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    return SUITES[suite](g)


__all__ = [
    "SUITES",
    "applicable",
    "check_achievable",
    "check_balls",
    "check_construction",
    "check_gamma",
    "check_identities",
    "check_oracle",
    "check_parity",
    "check_square",
    "failure",
    "random_ball_graphs",
    "replay",
    "sweep",
]


def check_achievable(h: FiniteGroup, sigma: GroupAutomorphism, c: Iterable[int], lg: LabeledGraph | None = None) -> list[dict]:
    """The census class count equals the number of classes in C and the strongly
    switching elements, read in H x| Z2, are exactly C."""
    from .constructions import achievable_construction
    from .groups import SemidirectZ2, tf_classes
    from .tf_iso import strongly_switching_elements

    c = frozenset(c)
    lg = lg or achievable_construction(h, sigma, c)
    g = lg.graph
    if not (is_reduced(g) and is_connected(g) and not is_bipartite(g)):
        return [failure(g, "reduced-connected-nonbipartite")]
    sd = SemidirectZ2(h, sigma)
    out = []
    tfs = aut_pi(g)
    expected = sum(1 for cls in tf_classes(h, sigma) if cls <= c)
    got = census(g, tfs=tfs).class_count
    if got != expected:
        out.append(failure(g, "class-count", expected=expected, got=got))
    image = set()
    for p, _ in strongly_switching_elements(g, tfs):
        k = translation_element(h, p)
        if k is None:
            out.append(failure(g, "switching-not-translation", p))
            return out
        image.add(sd.index(k, 1))
    if image != set(c):
        out.append(failure(g, "switching-image", expected=sorted(c), got=sorted(image)))
    return out
