import json

import pytest

from aecc.corpus import NAMED, default_corpus, named, stacked_triangulation, thin, write_corpus
from aecc.embedding import is_planar
from aecc.graph import GraphError, is_two_connected, max_degree, parse_edge_list
from aecc.schemas import MANIFEST, validate


def test_stacked_small():
    g, emb = stacked_triangulation(4)
    assert g == named("K4")
    g5 = stacked_triangulation(5, 1)[0]
    assert (g5.vertex_count, g5.edge_count) == (5, 9)


@pytest.mark.parametrize("n", [4, 10, 37, 120])
def test_stacked_is_triangulation(n):
    g, emb = stacked_triangulation(n, n)
    assert g.edge_count == 3 * n - 6
    assert is_planar(g) and is_two_connected(g)
    assert len(emb.faces) == 2 * n - 4 and all(f.degree == 3 for f in emb.faces)


def test_stacked_deterministic():
    assert stacked_triangulation(50, 7)[0] == stacked_triangulation(50, 7)[0]
    assert stacked_triangulation(50, 7)[0] != stacked_triangulation(50, 8)[0]


def test_stacked_rejects_small():
    with pytest.raises(GraphError):
        stacked_triangulation(2)


@pytest.mark.parametrize("name,n,m", [("octahedron", 6, 12), ("icosahedron", 12, 30),
                                      ("dodecahedron", 20, 30), ("cube", 8, 12), ("grid3x3", 9, 12),
                                      ("W5", 6, 10), ("C8", 8, 8), ("grid3×4", 12, 17)])
def test_named_sizes(name, n, m):
    g = named(name)
    assert (g.vertex_count, g.edge_count) == (n, m)


def test_named_all_planar():
    for name in NAMED:
        assert is_planar(named(name)), name


def test_named_unknown():
    with pytest.raises(GraphError):
        named("petersen")


def test_thin():
    k4 = named("K4")
    assert thin(k4, 0) == k4
    t = thin(k4, 1)
    assert (t.vertex_count, t.edge_count) == (10, 12)
    assert thin(k4, 0.5, 3) == thin(k4, 0.5, 3)
    with pytest.raises(GraphError):
        thin(k4, 1.5)


def test_default_corpus():
    entries = default_corpus()
    assert len(entries) == 260
    assert len({e.name for e in entries}) == 260
    assert all(is_planar(e.graph) for e in entries[:40])
    assert max(max_degree(e.graph) for e in entries) >= 10


def test_write_corpus_round_trip(tmp_path):
    entries = default_corpus()[:25]
    path = write_corpus(entries, tmp_path)
    rows = json.loads(path.read_text())
    validate(rows, MANIFEST)
    for e, row in zip(entries, rows):
        assert parse_edge_list((tmp_path / f"{e.name}.edges").read_text()) == e.graph
        assert (row["n"], row["m"]) == (e.graph.vertex_count, e.graph.edge_count)
