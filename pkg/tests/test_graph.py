import networkx as nx
import pytest

from aecc.corpus import named
from aecc.graph import (
    Graph, GraphError, blocks, components, count_neighbors_by_degree, degree, delete_edge,
    format_edge_list, is_connected, is_two_connected, max_degree, parse_edge_list, remove_vertex,
    strip_degree2, suppress_degree2,
)
from oracles import from_nx

K4 = named("K4")
C5 = named("C5")
W5 = named("W5")


def test_degree_examples():
    assert all(degree(K4, v) == 3 for v in K4.vertices())
    assert all(degree(C5, v) == 2 for v in C5.vertices())
    star = from_nx(nx.star_graph(4))
    assert degree(star, 0) == 4


def test_degree_unknown_vertex():
    with pytest.raises(GraphError):
        degree(K4, 4)


def test_max_degree():
    assert max_degree(K4) == 3
    assert max_degree(C5) == 2
    assert max_degree(W5) == 5
    with pytest.raises(GraphError):
        max_degree(Graph.from_edges(0, []))


def test_count_neighbors_by_degree():
    hub = max(W5.vertices(), key=lambda v: degree(W5, v))
    rim = next(v for v in W5.vertices() if v != hub)
    assert count_neighbors_by_degree(K4, 0, 3, 3) == 3
    assert count_neighbors_by_degree(W5, hub, 3, 3) == 5
    assert count_neighbors_by_degree(W5, rim, 5) == 1
    with pytest.raises(GraphError):
        count_neighbors_by_degree(K4, 0, 4, 3)


def test_two_connectivity():
    assert is_two_connected(C5)
    assert not is_two_connected(from_nx(nx.path_graph(4)))
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert not is_two_connected(bowtie)
    assert [b.labels for b in blocks(bowtie)] == [(0, 1, 2), (2, 3, 4)]


def test_delete_edge():
    g = delete_edge(K4, (0, 1))
    assert g.edge_count == 5
    assert delete_edge(named("K3"), (0, 1)).edges == [(0, 2), (1, 2)]
    with pytest.raises(GraphError):
        delete_edge(g, (1, 0))


def test_suppress_degree2():
    c4 = suppress_degree2(C5, 2)
    assert c4 == named("C4")
    assert c4.labels == (0, 1, 3, 4)
    assert suppress_degree2(named("C4"), 0) == named("K3")
    with pytest.raises(GraphError):
        suppress_degree2(named("K3"), 0)
    with pytest.raises(GraphError):
        suppress_degree2(K4, 0)


def test_suppress_keeps_neighbour_degrees():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2)])
    h = suppress_degree2(g, 4)
    old = {new: old for new, old in enumerate(h.labels)}
    for x in h.vertices():
        assert degree(h, x) == degree(g, old[x])


def test_strip_degree2():
    assert strip_degree2(C5).vertex_count == 0
    assert strip_degree2(K4) == K4
    sub = Graph.from_edges(5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 1)])
    h = strip_degree2(sub)
    assert (h.vertex_count, h.edge_count) == (4, 5)


def test_components_and_connectivity():
    g = Graph.from_edges(5, [(0, 1), (3, 4)])
    assert components(g) == [[0, 1], [2], [3, 4]]
    assert not is_connected(g)
    assert is_connected(K4)


def test_remove_vertex_reindexes():
    g = remove_vertex(K4, 1)
    assert g == named("K3")
    assert g.labels == (0, 2, 3)


def test_edge_list_round_trip():
    g = Graph.from_edges(6, [(0, 1), (1, 2)])
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize("text", ["0 x\n", "0 0\n", "0 1\n1 0\n", "1 2 3\n", "-1 2\n"])
def test_parse_errors(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)


def test_constructor_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])
