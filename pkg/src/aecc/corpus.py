"""Seeded generators for planar test graphs.

Randomness comes only from ``random.Random(seed)`` (Mersenne Twister), whose
output for ``randrange`` and ``random`` is stable across platforms and Python
versions, so corpora are reproducible byte for byte.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

import networkx as nx

from .embedding import PlaneEmbedding
from .graph import Graph, GraphError, edge_id, format_edge_list, max_degree


def stacked_triangulation(n: int, seed: int = 0) -> tuple[Graph, PlaneEmbedding]:
    """Random Apollonian network: K3, then n-3 insertions into seeded faces.

    Faces are kept as oriented triples; a new vertex x splits (a, b, c) into
    (a, b, x), (b, c, x), (c, a, x), the first replacing the old face in place.
    """
    if n < 3:
        raise GraphError("stacked triangulation needs n >= 3")
    rng = random.Random(seed)
    faces = [(0, 1, 2), (0, 2, 1)]
    edges = {(0, 1), (0, 2), (1, 2)}
    for x in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        faces[i] = (a, b, x)
        faces.append((b, c, x))
        faces.append((c, a, x))
        edges.update((edge_id(a, x), edge_id(b, x), edge_id(c, x)))
    g = Graph.from_edges(n, sorted(edges))
    return g, PlaneEmbedding(g, _rotation_from_faces(n, faces))


def _rotation_from_faces(n: int, faces: Iterable[tuple[int, int, int]]) -> tuple[tuple[int, ...], ...]:
    # a face walk ... a -> b -> c ... means c follows a in the rotation at b
    succ: list[dict[int, int]] = [{} for _ in range(n)]
    for f in faces:
        for k in range(3):
            a, b, c = f[k], f[(k + 1) % 3], f[(k + 2) % 3]
            succ[b][a] = c
    rotation = []
    for v in range(n):
        start = min(succ[v])
        order = [start]
        while (nxt := succ[v][order[-1]]) != start:
            order.append(nxt)
        rotation.append(tuple(order))
    return tuple(rotation)


def _from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {x: i for i, x in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[a], index[b]) for a, b in h.edges()])


_PLATONIC = {
    "cube": lambda: nx.hypercube_graph(3),
    "octahedron": nx.octahedral_graph,
    "icosahedron": nx.icosahedral_graph,
    "dodecahedron": nx.dodecahedral_graph,
    "tetrahedron": lambda: nx.complete_graph(4),
}


def named(name: str) -> Graph:
    """Named planar graphs: K3, K4, C<n>, W<n> (n spokes, n+1 vertices), cube,
    octahedron, icosahedron, dodecahedron, grid<m>x<n>."""
    key = name.strip().lower().replace("_", "").replace(" ", "").replace("×", "x")
    if key in ("k3", "triangle"):
        return _from_nx(nx.complete_graph(3))
    if key in ("k4",):
        return _from_nx(nx.complete_graph(4))
    if key in _PLATONIC:
        return _from_nx(_PLATONIC[key]())
    m = re.fullmatch(r"c(\d+)", key)
    if m and int(m.group(1)) >= 3:
        return _from_nx(nx.cycle_graph(int(m.group(1))))
    m = re.fullmatch(r"w(\d+)", key)
    if m and int(m.group(1)) >= 3:
        return _from_nx(nx.wheel_graph(int(m.group(1)) + 1))
    m = re.fullmatch(r"grid(\d+)x(\d+)", key)
    if m and int(m.group(1)) >= 1 and int(m.group(2)) >= 1:
        return _from_nx(nx.grid_2d_graph(int(m.group(1)), int(m.group(2))))
    raise GraphError(f"unknown graph name {name!r}")


NAMED = ("K3", "K4", "C3", "C4", "C5", "C8", "W3", "W4", "W5", "W6", "W8", "W12", "cube",
         "octahedron", "icosahedron", "dodecahedron", "grid2x2", "grid3x3", "grid4x5", "grid6x6")


def thin(g: Graph, p: float, seed: int = 0) -> Graph:
    """Subdivide each edge (in sorted order) independently with probability p."""
    if not 0 <= p <= 1:
        raise GraphError("p must lie in [0, 1]")
    rng = random.Random(seed)
    n = g.vertex_count
    edges = []
    for u, v in g.edges:
        if rng.random() < p:
            edges += [(u, n), (n, v)]
            n += 1
        else:
            edges.append((u, v))
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: Graph
    seed: Optional[int] = None

    def manifest(self) -> dict:
        g = self.graph
        return {"name": self.name, "n": g.vertex_count, "m": g.edge_count,
                "delta": max_degree(g) if g.vertex_count else 0, "seed": self.seed}


def default_corpus(seed: int = 0) -> list[CorpusEntry]:
    """The fixed test corpus: named graphs, stacked triangulations with
    4 <= n <= 200, and thinned copies of some of them."""
    out = [CorpusEntry(name, named(name)) for name in NAMED]
    sizes = range(4, 201)
    for i, n in enumerate(sizes):
        s = seed * 1000 + i
        out.append(CorpusEntry(f"stacked-{n}-s{s}", stacked_triangulation(n, s)[0], s))
    for i, n in enumerate(range(4, 121, 3)):
        s = seed * 1000 + 500 + i
        base = stacked_triangulation(n, s)[0]
        p = (0.1, 0.25, 0.5)[i % 3]
        out.append(CorpusEntry(f"thin-{n}-p{p}-s{s}", thin(base, p, s), s))
    for name in ("icosahedron", "dodecahedron", "octahedron", "grid4x5"):
        out.append(CorpusEntry(f"thin-{name}-p0.3-s{seed}", thin(named(name), 0.3, seed), seed))
    return out


def write_corpus(entries: Iterable[CorpusEntry], out_dir) -> Path:
    """Write one edge-list file per entry plus manifest.json; returns the manifest path."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = []
    for e in entries:
        (out_dir / f"{e.name}.edges").write_text(format_edge_list(e.graph))
        rows.append(e.manifest())
    path = out_dir / "manifest.json"
    path.write_text(json.dumps(rows, indent=2, sort_keys=True) + "\n")
    return path
