"""Combinatorial plane embeddings (rotation systems) and their faces."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .graph import Edge, Graph, GraphError, edge_id, is_connected

Dart = tuple[int, int]


class NotPlanar(GraphError):
    pass


@dataclass(frozen=True)
class Face:
    darts: tuple[Dart, ...]

    @property
    def degree(self) -> int:
        # a cut edge contributes both of its darts, so it is counted twice
        return len(self.darts)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(u for u, _ in self.darts)

    def walk(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.darts)


@dataclass(frozen=True, eq=False)
class PlaneEmbedding:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = self.graph
        if len(self.rotation) != g.vertex_count:
            raise GraphError("rotation system must list every vertex")
        for v, order in enumerate(self.rotation):
            if len(order) != len(set(order)) or set(order) != g.adjacency[v]:
                raise GraphError(f"rotation at {v} does not list its neighbours exactly once")
        if not is_connected(g):
            raise GraphError("embedding requires a connected graph")
        n, m, f = g.vertex_count, g.edge_count, len(self.faces)
        if n - m + f != 2:
            raise NotPlanar(f"rotation system has Euler characteristic {n - m + f}, not 2")

    @cached_property
    def _position(self) -> dict[Dart, int]:
        return {(v, x): i for v, order in enumerate(self.rotation) for i, x in enumerate(order)}

    def next_dart(self, dart: Dart) -> Dart:
        """Successor of ``dart`` along its face boundary."""
        u, v = dart
        order = self.rotation[v]
        return (v, order[(self._position[(v, u)] + 1) % len(order)])

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        seen: set[Dart] = set()
        found = []
        for v, order in enumerate(self.rotation):
            for x in order:
                start = (v, x)
                if start in seen:
                    continue
                darts = []
                d = start
                while d not in seen:
                    seen.add(d)
                    darts.append(d)
                    d = self.next_dart(d)
                i = darts.index(min(darts))
                found.append(tuple(darts[i:] + darts[:i]))
        if self.graph.edge_count == 0:
            return (Face(()),)
        return tuple(Face(d) for d in sorted(found))

    @cached_property
    def dart_face(self) -> dict[Dart, int]:
        return {d: i for i, f in enumerate(self.faces) for d in f.darts}

    def faces_at(self, v: int) -> list[int]:
        """Indices of faces incident with v (each listed once)."""
        if self.graph.edge_count == 0:
            return [0]
        return sorted({self.dart_face[(v, x)] for x in self.rotation[v]})

    def faces_of_edge(self, e: Edge) -> tuple[int, int]:
        u, v = edge_id(*e)
        if not self.graph.has_edge(u, v):
            raise GraphError(f"missing edge {(u, v)}")
        return self.dart_face[(u, v)], self.dart_face[(v, u)]

    def other_face(self, e: Edge, f: int) -> int:
        """The face across edge e from face f."""
        a, b = self.faces_of_edge(e)
        if f == a:
            return b
        if f == b:
            return a
        raise GraphError(f"face {f} is not incident with {e}")

    def face_degree(self, f: int) -> int:
        return self.faces[f].degree


def embed(g: Graph) -> PlaneEmbedding:
    """Planar rotation system for a connected graph, or raise NotPlanar."""
    if not is_connected(g):
        raise GraphError("embed requires a connected graph")
    ok, emb = nx.check_planarity(g.to_networkx())
    if not ok:
        raise NotPlanar("graph is not planar")
    rotation = tuple(tuple(emb.neighbors_cw_order(v)) if g.adjacency[v] else () for v in g.vertices())
    return PlaneEmbedding(g, rotation)


def is_planar(g: Graph) -> bool:
    return nx.check_planarity(g.to_networkx())[0]


def faces(e: PlaneEmbedding) -> list[Face]:
    return list(e.faces)


def incident_3faces(e: PlaneEmbedding, v: int) -> int:
    e.graph._check(v)
    return sum(1 for f in e.faces_at(v) if e.faces[f].degree == 3)


def edge_3faces(e: PlaneEmbedding, uv: Edge) -> int:
    """m_3 of an edge: distinct 3-faces among the faces bounded by uv."""
    return sum(1 for f in set(e.faces_of_edge(uv)) if e.faces[f].degree == 3)


def faces_of_edge(e: PlaneEmbedding, uv: Edge) -> tuple[Face, Face]:
    a, b = e.faces_of_edge(uv)
    return e.faces[a], e.faces[b]


# -- rotation-system text format --------------------------------------------

def parse_rotation(g: Graph, text: str) -> PlaneEmbedding:
    rotation: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise GraphError(f"line {lineno}: expected 'v: n1 n2 ...'")
        try:
            v = int(head)
            rotation[v] = tuple(int(x) for x in rest.split())
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer entry in {raw!r}") from None
    return PlaneEmbedding(g, tuple(rotation.get(v, ()) for v in g.vertices()))


def format_rotation(e: PlaneEmbedding) -> str:
    return "".join(f"{v}: {' '.join(map(str, order))}\n" for v, order in enumerate(e.rotation))
