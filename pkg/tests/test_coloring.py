import pytest

from aecc.coloring import (
    ColorTable, ColoringError, EdgeColoring, b_set, check_acyclic, color_set, exists_ab_path,
    find_bichromatic_cycle, format_coloring, kempe_swap, maximal_ab_path, parse_coloring,
)
from aecc.corpus import named
from aecc.graph import Graph
from oracles import pair_forests, proper_colorings

C3 = named("K3")
C4 = named("C4")
K4 = named("K4")
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])


def col(g, values, k=None):
    return EdgeColoring(k or max(values), dict(zip(g.edges, values)))


def c4(*cols):
    # C4 edges in cycle order 0-1-2-3-0
    order = [(0, 1), (1, 2), (2, 3), (0, 3)]
    return EdgeColoring(max(cols), dict(zip(order, cols)))


def test_check_acyclic_examples():
    assert check_acyclic(C3, col(C3, [1, 2, 3])) is None
    bad = check_acyclic(C3, col(C3, [1, 1, 2]))
    assert bad.kind == "proper" and bad.vertex == 0
    v = check_acyclic(C4, c4(1, 2, 1, 2))
    assert v.kind == "bichromatic" and set(v.colors) == {1, 2}
    assert v.holds(C4, c4(1, 2, 1, 2))


def test_find_bichromatic_cycle_examples():
    cyc, a, b = find_bichromatic_cycle(C4, c4(1, 2, 1, 2))
    assert cyc == (0, 1, 2, 3) and (a, b) == (1, 2)
    assert find_bichromatic_cycle(C4, c4(1, 2, 1, 3)) is None


def test_k4_proper_three_colourings_all_cyclic():
    seen = 0
    for c in proper_colorings(K4, 3, canonical=False):
        seen += 1
        found = find_bichromatic_cycle(K4, c)
        assert found is not None and len(found[0]) == 4
    assert seen == 6


def test_tree_always_acyclic():
    star = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    assert check_acyclic(star, col(star, [1, 2, 3, 1])) is None


def test_partial_colouring_rejected():
    with pytest.raises(ColoringError):
        check_acyclic(C4, EdgeColoring(3, {(0, 1): 1}))


def test_colour_range_validated():
    with pytest.raises(ColoringError):
        EdgeColoring(2, {(0, 1): 3})
    with pytest.raises(ColoringError):
        EdgeColoring(2, {(0, 1): 0})


def test_color_set():
    g = Graph.from_edges(4, [(0, 1), (0, 2)])
    assert color_set(g, EdgeColoring(2, {}), 3) == set()
    assert color_set(K4, col(K4, [1, 2, 3, 3, 2, 1]), 0) == {1, 2, 3}
    assert color_set(g, EdgeColoring(7, {(0, 1): 7}), 0) == {7}


def test_maximal_ab_path():
    c = col(P3, [1, 2])
    assert maximal_ab_path(P3, c, 0, 1, 2) == (0, 1, 2)
    assert maximal_ab_path(P3, c, 2, 1, 2) == (2, 1, 0)
    assert maximal_ab_path(P3, c, 0, 3, 4) == (0,)
    path = maximal_ab_path(C4, c4(1, 2, 1, 3), 3, 1, 2)
    assert path == (3, 2, 1, 0) and len(path) - 1 <= 3


def test_maximal_ab_path_alternates():
    c = c4(1, 2, 1, 3)
    path = maximal_ab_path(C4, c, 0, 1, 2)
    cols = [c.get(tuple(sorted(p))) for p in zip(path, path[1:])]
    assert all(x != y for x, y in zip(cols, cols[1:]))


def test_exists_ab_path():
    c = col(P3, [1, 2])
    assert exists_ab_path(P3, c, 0, 2, 1, 2)
    assert not exists_ab_path(P3, c, 0, 2, 1, 3)
    assert exists_ab_path(C4, c4(1, 2, 1, 3), 0, 3, 1, 2)


def test_b_set():
    c = col(P3, [1, 2])
    assert b_set(P3, c, 0, 2, 1) == {2}
    two = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert b_set(two, EdgeColoring(2, {(0, 1): 1, (2, 3): 1}), 0, 3, 1) == set()


def test_b_set_on_k4():
    # three perfect matchings coloured 1, 2, 3
    c = EdgeColoring(3, {(0, 1): 1, (2, 3): 1, (0, 2): 2, (1, 3): 2, (0, 3): 3, (1, 2): 3})
    assert b_set(K4, c, 0, 3, 1) == {2, 3}


def test_kempe_swap():
    g = Graph.from_edges(2, [(0, 1)])
    c = EdgeColoring(2, {(0, 1): 1})
    assert kempe_swap(g, c, 0, 1, 2)[(0, 1)] == 2
    assert kempe_swap(g, c, 0, 3, 4) == c
    p = col(P3, [1, 2], 3)
    assert kempe_swap(P3, kempe_swap(P3, p, 0, 1, 2), 0, 1, 2) == p


def test_colour_table_matches_checker():
    t = ColorTable(C4, 3, c4(1, 2, 1, 3).updated({(0, 3): None}))
    assert not t.can_take((0, 3), 2)
    assert t.can_take((0, 3), 3)
    t.assign((0, 3), 3)
    assert t.edge_ok((0, 3))
    assert check_acyclic(C4, t.freeze()) is None


def test_colour_table_swap_is_involution():
    c = EdgeColoring(4, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 3})
    t = ColorTable(C4, 4, c)
    t.swap(0, 1, 2)
    assert t.freeze() != c
    t.swap(0, 1, 2)
    assert t.freeze() == c


def test_coloring_text_round_trip():
    c = c4(1, 2, 1, 3)
    assert parse_coloring(format_coloring(C4, c), 3) == c
    with pytest.raises(ColoringError):
        parse_coloring("0 1 1\n1 0 2\n")
    with pytest.raises(ColoringError):
        parse_coloring("0 1 a\n")


def test_verifier_agrees_with_forest_check_small():
    for g in (C3, C4, K4, named("W4")):
        for c in proper_colorings(g, 4):
            assert (find_bichromatic_cycle(g, c) is None) == pair_forests(g, c)
