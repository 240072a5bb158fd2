from __future__ import annotations

import pytest

from twofold.graph import Graph
from twofold.io import (
    Graph6Error,
    adjlist_export,
    adjlist_parse,
    dot_export,
    graph6_decode,
    graph6_encode,
    read_graph,
)


def test_k1_shortest():
    assert graph6_encode(Graph.empty(1)) == "@"


def test_known_strings():
    import networkx as nx

    assert graph6_encode(Graph.complete(4)) == "C~"
    ref = nx.to_graph6_bytes(nx.relabel_nodes(nx.petersen_graph(), {i: i for i in range(10)}), header=False)
    assert graph6_decode(ref.decode().strip()).num_edges() == 15


def test_petersen_roundtrip():
    g = Graph.petersen()
    assert graph6_decode(graph6_encode(g)) == g


def test_header_accepted():
    g = Graph.cycle(5)
    assert graph6_decode(graph6_encode(g, header=True)) == g


def test_matches_networkx():
    import networkx as nx

    for n in (1, 5, 12, 63, 64, 70):
        h = nx.gnp_random_graph(n, 0.4, seed=n)
        g = Graph.from_edges(n, list(h.edges()))
        assert graph6_encode(g) == nx.to_graph6_bytes(h, header=False).decode().strip()


def test_large_size_roundtrip():
    g = Graph.cycle(300)
    assert graph6_decode(graph6_encode(g)) == g


def test_truncated_reports_offset():
    with pytest.raises(Graph6Error) as e:
        graph6_decode("D?")
    assert e.value.offset >= 0


def test_bad_byte():
    with pytest.raises(Graph6Error):
        graph6_decode("D?\x01{")


def test_empty_string():
    with pytest.raises(Graph6Error):
        graph6_decode("")


def test_loops_rejected():
    with pytest.raises(Exception):
        graph6_encode(Graph.from_edges(2, [(0, 0)], allow_loops=True))


def test_adjlist_roundtrip():
    g = Graph.petersen()
    assert adjlist_parse(adjlist_export(g)) == g


def test_read_graph_both_formats():
    g = Graph.cycle(5)
    assert read_graph(graph6_encode(g) + "\n") == g
    assert read_graph(adjlist_export(g)) == g


def test_dot_export_labels():
    out = dot_export(Graph.path(2), ["a", "b"])
    assert "graph G" in out and '"a"' in out and "--" in out
