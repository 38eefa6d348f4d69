import pytest

from aecc.corpus import named, stacked_triangulation
from aecc.embedding import (
    NotPlanar, PlaneEmbedding, edge_3faces, embed, faces_of_edge, format_rotation, incident_3faces,
    is_planar, parse_rotation,
)
from aecc.graph import Graph, GraphError


def test_k4_has_four_triangles():
    e = embed(named("K4"))
    assert sorted(f.degree for f in e.faces) == [3, 3, 3, 3]


def test_k5_not_planar():
    k5 = Graph.from_edges(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert not is_planar(k5)
    with pytest.raises(NotPlanar):
        embed(k5)


def test_face_degrees():
    assert sorted(f.degree for f in embed(named("cube")).faces) == [4] * 6
    assert sorted(f.degree for f in embed(named("C5")).faces) == [5, 5]


def test_incident_3faces():
    k4, octa, c5 = (embed(named(n)) for n in ("K4", "octahedron", "C5"))
    assert all(incident_3faces(k4, v) == 3 for v in range(4))
    assert all(incident_3faces(octa, v) == 4 for v in range(6))
    assert all(incident_3faces(c5, v) == 0 for v in range(5))


def test_faces_of_edge():
    f1, f2 = faces_of_edge(embed(named("K4")), (0, 1))
    assert (f1.degree, f2.degree) == (3, 3) and f1 != f2
    f1, f2 = faces_of_edge(embed(named("cube")), (0, 1))
    assert (f1.degree, f2.degree) == (4, 4)
    f1, f2 = faces_of_edge(embed(named("C5")), (0, 1))
    assert {f1.degree, f2.degree} == {5} and f1 != f2
    assert edge_3faces(embed(named("K4")), (0, 1)) == 2


def test_bridge_counts_twice():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    e = embed(path)
    assert [f.degree for f in e.faces] == [4]


def test_euler_and_face_sums_on_triangulations():
    for n in (4, 10, 30):
        g, emb = stacked_triangulation(n, n)
        assert g.vertex_count - g.edge_count + len(emb.faces) == 2
        assert sum(f.degree for f in emb.faces) == 2 * g.edge_count
        assert all(f.degree == 3 for f in emb.faces)


def test_rotation_round_trip_and_validation():
    g = named("K4")
    e = embed(g)
    again = parse_rotation(g, format_rotation(e))
    assert again.faces == e.faces
    with pytest.raises(GraphError):
        PlaneEmbedding(g, ((1, 2), (0, 2, 3), (0, 1, 3), (0, 1, 2)))


def test_non_planar_rotation_rejected():
    # a rotation system of K4 with genus 1 fails Euler
    g = named("K4")
    with pytest.raises(NotPlanar):
        PlaneEmbedding(g, ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)))


def test_embed_requires_connected():
    with pytest.raises(GraphError):
        embed(Graph.from_edges(4, [(0, 1), (2, 3)]))
