from __future__ import annotations

import math

import numpy as np
import pytest

from twofold.graph import (
    Graph,
    GraphError,
    VertexPartition,
    ball,
    bipartition,
    complement,
    components,
    diameter,
    distance_matrix,
    has_hexagon,
    has_nested_neighborhoods,
    has_triangle,
    induced_is_coclique,
    is_bipartite,
    is_connected,
    is_reduced,
    neighborhood,
    square,
)
from twofold.oracle import brute_iso


def two_k(k: int, parts: int) -> Graph:
    """parts disjoint copies of K_k."""
    edges = [(p * k + i, p * k + j) for p in range(parts) for i in range(k) for j in range(i + 1, k)]
    return Graph.from_edges(k * parts, edges)


class TestBasics:
    def test_from_edges_symmetric(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert g.has_edge(1, 0) and g.has_edge(2, 1) and not g.has_edge(0, 2)
        assert g.edges() == [(0, 1), (1, 2)]

    def test_loops_rejected_by_default(self):
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 0)])
        assert Graph.from_edges(2, [(0, 0)], allow_loops=True).has_loops()

    def test_out_of_range_edge(self):
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 2)])

    def test_adjacency_roundtrip(self):
        g = Graph.petersen()
        assert Graph.from_adjacency(g.adjacency_matrix()) == g

    def test_relabel_preserves_edge_count(self):
        g = Graph.path(5)
        h = g.relabel([4, 3, 2, 1, 0])
        assert h.num_edges() == g.num_edges() and h.has_edge(4, 3)


class TestNeighborhood:
    def test_k3(self):
        assert neighborhood(Graph.complete(3), 0) == {1, 2}

    def test_petersen_cubic(self):
        g = Graph.petersen()
        assert all(len(neighborhood(g, v)) == 3 for v in range(10))

    def test_single_vertex(self):
        assert neighborhood(Graph.empty(1), 0) == frozenset()

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            neighborhood(Graph.complete(3), 3)


class TestBall:
    def test_c5_radius_one(self):
        assert ball(Graph.cycle(5), 0, 1) == {4, 0, 1}

    def test_c5_radius_two(self):
        assert ball(Graph.cycle(5), 0, 2) == set(range(5))

    def test_unreachable_excluded(self):
        assert ball(Graph.empty(2), 0, 5) == {0}

    def test_radius_zero(self):
        assert ball(Graph.petersen(), 3, 0) == {3}


class TestStructure:
    def test_reduced_examples(self):
        assert is_reduced(Graph.complete(3))
        assert not is_reduced(Graph.cycle(4))
        assert is_reduced(Graph.petersen())

    def test_connected_bipartite(self):
        c6 = Graph.cycle(6)
        assert is_connected(c6) and is_bipartite(c6)
        assert not is_bipartite(Graph.cycle(5))
        assert not is_connected(two_k(2, 2))

    def test_bipartition_is_proper(self):
        c6 = Graph.cycle(6)
        col = bipartition(c6)
        assert all(col[u] != col[v] for u, v in c6.edges())
        assert bipartition(Graph.cycle(5)) is None

    def test_components(self):
        assert sorted(map(sorted, components(two_k(2, 2)))) == [[0, 1], [2, 3]]

    def test_empty_graph_is_connected_convention(self):
        assert is_connected(Graph.empty(1))


class TestComplementSquare:
    def test_complement_complete(self):
        assert complement(Graph.complete(5)) == Graph.empty(5)

    def test_complement_involution(self):
        g = Graph.petersen()
        assert complement(complement(g)) == g

    def test_complement_c5_self_complementary(self):
        assert brute_iso(complement(Graph.cycle(5)), Graph.cycle(5))

    def test_complement_rejects_loops(self):
        with pytest.raises(GraphError):
            complement(Graph.from_edges(2, [(0, 0)], allow_loops=True))

    def test_square_p3(self):
        assert square(Graph.path(3)).edges() == [(0, 2)]

    def test_square_c5(self):
        sq = square(Graph.cycle(5))
        assert sq.num_edges() == 5
        assert sorted(sq.edges()) == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]

    def test_square_k3(self):
        assert square(Graph.complete(3)) == Graph.complete(3)

    def test_square_no_loops(self):
        assert not square(Graph.petersen()).has_loops()


class TestDistances:
    def test_c5(self):
        assert distance_matrix(Graph.cycle(5))[0, 2] == 2

    def test_disconnected(self):
        assert math.isinf(distance_matrix(Graph.empty(2))[0, 1])

    def test_petersen_diameter(self):
        assert diameter(Graph.petersen()) == 2

    def test_zero_diagonal(self):
        d = distance_matrix(Graph.cycle(7))
        assert np.all(np.diag(d) == 0)


class TestCycleTests:
    def test_triangle(self):
        assert has_triangle(Graph.complete(3))
        assert not has_triangle(Graph.cycle(6))

    def test_hexagon(self):
        assert has_hexagon(Graph.cycle(6))
        assert not has_hexagon(Graph.cycle(5))
        assert not has_hexagon(Graph.cycle(7))

    def test_hexagon_not_induced(self):
        # K6 has 6-cycles, none induced
        assert has_hexagon(Graph.complete(6))

    def test_petersen_hexagon(self):
        assert has_hexagon(Graph.petersen())

    def test_nested(self):
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert not has_nested_neighborhoods(star)
        assert not has_nested_neighborhoods(Graph.path(3))
        # P4 0-1-2-3 plus pendant 4 on 1: N(0) = {1} is strictly inside N(2) = {1, 3}
        assert has_nested_neighborhoods(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)]))

    def test_coclique(self):
        assert induced_is_coclique(Graph.cycle(6), [0, 2, 4])
        assert not induced_is_coclique(Graph.cycle(6), [0, 1])


class TestPartition:
    def test_from_keys_order(self):
        p = VertexPartition.from_keys([2, 1, 2, 0])
        assert p.cells == ((3,), (1,), (0, 2))
        assert not p.is_discrete()

    def test_prepartition(self):
        p = VertexPartition.from_keys([0, 0, 1, 1])
        assert p.is_prepartition_of([[0, 1], [2], [3]])
        assert not p.is_prepartition_of([[1, 2]])
