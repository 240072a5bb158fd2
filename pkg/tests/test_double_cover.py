from __future__ import annotations

import json

import pytest

from twofold.constructions import gamma_construction, skeleton_r
from twofold.double_cover import (
    DomainError,
    PreconditionError,
    alpha_of,
    aut,
    aut_pi,
    aut_tau,
    aut_tau_structure,
    ball_theorem_failures,
    double_cover,
    gamma_of,
    induced_gamma,
    is_stable,
    ne_refinement,
    orbit_cocliques,
    square_subgroup_check,
    stability_report,
    stability_report_json,
    verify_distance_parity,
)
from twofold.graph import Graph, complement, is_bipartite, is_connected, is_reduced
from twofold.groups import cyclic, inversion_automorphism
from twofold.io import graph6_decode
from twofold.oracle import brute_iso
from twofold.perm import Permutation

# a nontrivially unstable 5-vertex graph; orders frozen from the brute-force oracle
UNSTABLE5 = "D`{"


@pytest.fixture(scope="module")
def z3_graph() -> Graph:
    h = cyclic(3)
    return gamma_construction(h, inversion_automorphism(h)).graph


class TestDoubleCover:
    def test_k3_is_c6(self):
        assert brute_iso(double_cover(Graph.complete(3)), Graph.cycle(6))

    def test_c5_is_c10(self):
        bc = double_cover(Graph.cycle(5))
        assert is_connected(bc) and all(d == 2 for d in bc.degrees()) and bc.n == 10

    def test_c6_splits(self):
        bc = double_cover(Graph.cycle(6))
        assert not is_connected(bc) and bc.num_edges() == 12

    def test_bipartite_parts(self):
        bc = double_cover(Graph.petersen())
        assert is_bipartite(bc)
        assert all((u < 10) != (v < 10) for u, v in bc.edges())


class TestNeRefinement:
    @pytest.mark.parametrize("n0", range(6, 13))
    def test_skeleton_discrete(self, n0):
        part, _ = ne_refinement(skeleton_r(n0).graph)
        assert part.is_discrete()

    def test_vertex_transitive_single_cell(self):
        assert len(ne_refinement(Graph.cycle(5))[0]) == 1

    def test_construction_cells(self, z3_graph):
        part, _ = ne_refinement(z3_graph)
        assert sorted(part.cells) == [tuple(range(3 * i, 3 * i + 3)) for i in range(12)]

    def test_prepartition_of_orbits(self, corpus6):
        for g in corpus6:
            if is_reduced(g):
                part, _ = ne_refinement(g)
                assert part.is_prepartition_of(aut_pi(g).orbits())


class TestAutPi:
    def test_petersen(self):
        t = aut_pi(Graph.petersen())
        assert t.aut_pi.order() == len(t.aut) == 120 and t.inst == 1

    def test_z3_construction(self, z3_graph):
        t = aut_pi(z3_graph)
        assert t.aut_pi.order() == 3 and len(t.aut) == 1 and t.inst == 3

    def test_k3(self):
        t = aut_pi(Graph.complete(3))
        assert t.aut_pi.order() == 6 and len(t.aut) == 6

    def test_unstable_small(self):
        t = aut_pi(graph6_decode(UNSTABLE5))
        assert t.aut_pi.order() == 24 and len(t.aut) == 8 and t.inst == 3

    def test_not_reduced(self):
        with pytest.raises(PreconditionError):
            aut_pi(Graph.cycle(4))

    def test_loops_rejected(self):
        with pytest.raises(PreconditionError):
            aut_pi(Graph.from_edges(3, [(0, 0), (1, 2), (0, 1)], allow_loops=True))

    def test_bipartite_inst_undefined(self):
        assert aut_pi(Graph.cycle(6)).inst is None

    def test_gamma_matches_neighbourhood_hashing(self, reduced6):
        for g in reduced6:
            t = aut_pi(g)
            assert all(induced_gamma(g, p) == t.gamma[p] for p in t.elements)

    def test_derived_sets(self, reduced6):
        for g in reduced6:
            t = aut_pi(g)
            assert t.im_alpha <= t.ant
            assert len(t.im_alpha) * len(t.aut) == t.aut_pi.order()
            assert all(not any(g.has_edge(v, p[v]) for v in range(g.n)) for p in t.ant0)

    def test_gamma_is_homomorphism(self, reduced6):
        for g in reduced6[:60]:
            t = aut_pi(g)
            for p in t.elements:
                for q in t.elements:
                    assert t.gamma[p * q] == t.gamma[p] * t.gamma[q]


class TestGammaAlpha:
    def test_automorphism_fixed(self):
        t = aut_pi(Graph.petersen())
        p = t.aut[5]
        assert gamma_of(t, p) == p and alpha_of(t, p).is_identity()

    def test_alpha_automorphic_inverse(self, z3_graph):
        t = aut_pi(z3_graph)
        assert all(gamma_of(t, p) == p.inverse() for p in t.elements)
        assert set(t.elements) == set(t.im_alpha) == set(t.ant)

    def test_domain_error(self):
        t = aut_pi(Graph.cycle(5))
        with pytest.raises(DomainError):
            gamma_of(t, Permutation([1, 0, 2, 3, 4]))

    def test_im_alpha_powers(self, reduced6):
        for g in reduced6:
            t = aut_pi(g)
            for p in t.im_alpha:
                assert all(p**k in t.im_alpha for k in range(-2, 4))
                assert orbit_cocliques(g, p)


class TestStability:
    def test_verdicts(self, z3_graph):
        assert str(is_stable(Graph.cycle(4))) == "trivially_unstable(not reduced)"
        assert str(is_stable(Graph.cycle(6))) == "trivially_unstable(bipartite)"
        assert is_stable(Graph.petersen()).kind == "stable"
        v = is_stable(z3_graph)
        assert v.kind == "unstable" and v.inst == 3

    def test_disconnected(self):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert is_stable(g).reason == "disconnected"

    def test_report_keys(self):
        rep = json.loads(stability_report_json(Graph.petersen()))
        for key in ("n", "reduced", "connected", "bipartite", "aut_order", "aut_pi_order", "inst", "stable", "ant_size", "ant0_size", "orbit_cells"):
            assert key in rep
        assert rep["ant_size"] == 26 and rep["ant0_size"] == 11

    def test_report_not_defined(self):
        assert stability_report(Graph.cycle(6))["inst"] == "not defined"
        assert stability_report(Graph.cycle(4))["aut_pi_order"] is None

    def test_aut_with_loops(self):
        g = Graph.from_edges(3, [(0, 0), (0, 1), (1, 2)], allow_loops=True)
        assert aut(g).order() == 1


class TestTopological:
    def test_empty_graph(self):
        assert aut_tau(Graph.empty(3)).order() == 6

    def test_complement_c5(self):
        assert aut_tau(complement(Graph.cycle(5))).order() == 10

    @pytest.mark.parametrize("n", [5, 7, 9])
    def test_ball_theorem_cycles(self, n):
        assert ball_theorem_failures(Graph.cycle(n)) == []

    def test_distance_parity(self):
        g = Graph.cycle(7)
        tau = aut_tau_structure(g)
        assert verify_distance_parity(g, Permutation.identity(7))
        assert all(verify_distance_parity(g, p) for p in tau.elements)

    def test_distance_parity_can_fail(self):
        # a transposition of a path's end and middle breaks the bands
        assert not verify_distance_parity(Graph.path(5), [2, 1, 0, 3, 4])

    def test_complement_not_reduced(self):
        with pytest.raises(PreconditionError):
            aut_tau(complement(Graph.cycle(4)))


class TestSquare:
    def test_petersen(self):
        rep = square_subgroup_check(Graph.petersen())
        assert rep.contained and rep.holds

    def test_c7_equality(self):
        rep = square_subgroup_check(Graph.cycle(7))
        assert rep.contained and rep.hypotheses and rep.equal

    def test_k3(self):
        rep = square_subgroup_check(Graph.complete(3))
        assert rep.contained and not rep.hypotheses and rep.equal is None
