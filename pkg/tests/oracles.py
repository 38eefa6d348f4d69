"""Slow, obviously-correct reference implementations used only by the tests."""

from __future__ import annotations

import random
from itertools import permutations, product

import networkx as nx

from aecc.coloring import EdgeColoring
from aecc.configs import TAGS, Stats
from aecc.graph import Graph, edge_id


def from_nx(h) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph.from_edges(h.number_of_nodes(), h.edges())


# -- acyclicity -----------------------------------------------------------------

def pair_forests(g: Graph, c: EdgeColoring) -> bool:
    """True iff the union of every two colour classes is a forest (union-find)."""
    cols = sorted(set(c.assignment.values()))
    for i, a in enumerate(cols):
        for b in cols[i + 1:]:
            parent = list(range(g.vertex_count))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for e, col in c.assignment.items():
                if col in (a, b):
                    ra, rb = find(e[0]), find(e[1])
                    if ra == rb:
                        return False
                    parent[ra] = rb
    return True


def is_proper(g: Graph, c: EdgeColoring) -> bool:
    for v in g.vertices():
        cols = [c.assignment[edge_id(v, x)] for x in g.adjacency[v]]
        if len(cols) != len(set(cols)):
            return False
    return True


def proper_colorings(g: Graph, k: int, canonical: bool = True):
    """Every proper edge colouring with colours 1..k (colours introduced in
    increasing order when canonical, which loses nothing up to renaming)."""
    edges = g.edges
    out: dict = {}

    def rec(i, top):
        if i == len(edges):
            yield EdgeColoring(k, dict(out))
            return
        u, v = edges[i]
        used = {out[e] for e in out if u in e or v in e}
        for col in range(1, (min(k, top + 1) if canonical else k) + 1):
            if col not in used:
                out[edges[i]] = col
                yield from rec(i + 1, max(top, col))
                del out[edges[i]]

    yield from rec(0, 0)


def brute_acyclic_exists(g: Graph, k: int) -> bool:
    edges = g.edges
    for cols in product(range(1, k + 1), repeat=len(edges)):
        c = EdgeColoring(k, dict(zip(edges, cols)))
        if is_proper(g, c) and pair_forests(g, c):
            return True
    return False


# -- configurations ---------------------------------------------------------------

# degree of the first witness vertex demanded by each tag's definition
CENTER_DEGREE = {
    "A1.1": (0, 99), "A1.2": (0, 7), "A1.3": (0, 99), "A2.1": (0, 7), "A2.2": (8, 11),
    "A2.3": (8, 8), "A2.4": (8, 8), "A5.1": (11, 11), "A5.2": (11, 11),
    **{f"A3.{i}": (9, 9) for i in range(1, 9)},
    **{f"A4.{i}": (10, 10) for i in range(1, 5)},
    **{f"A6.{i}": (4, 4) for i in range(1, 5)},
    **{f"A7.{i}": (5, 5) for i in range(1, 4)},
    **{f"A8.{i}": (5, 5) for i in range(1, 5)},
}


def brute_witnesses(g: Graph, tag: str, strict: bool = False):
    """All tuples of distinct vertices satisfying the tag predicate, sorted."""
    spec = TAGS[tag]
    st = Stats(g)
    lo, hi = CENTER_DEGREE[tag]
    found = []
    for u in g.vertices():
        if not lo <= st.d[u] <= hi:
            continue
        others = [x for x in g.vertices() if x != u]
        for rest in permutations(others, spec.arity - 1):
            t = (u,) + rest
            if spec.predicate(st, t, strict):
                found.append(t)
    return found


def brute_first(g: Graph, tag: str, strict: bool = False):
    spec = TAGS[tag]
    st = Stats(g)
    lo, hi = CENTER_DEGREE[tag]
    for u in g.vertices():
        if not lo <= st.d[u] <= hi:
            continue
        others = [x for x in g.vertices() if x != u]
        for rest in permutations(others, spec.arity - 1):
            t = (u,) + rest
            if spec.predicate(st, t, strict):
                return t
    return None


def random_small_graphs(count: int, seed: int = 0, max_n: int = 8):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        p = rng.choice((0.2, 0.35, 0.5, 0.65, 0.8))
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        yield Graph.from_edges(n, edges)

