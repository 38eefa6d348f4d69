"""Simple undirected graphs with dense integer vertex ids.

Graphs are immutable values.  Every operation that changes the vertex set
returns a re-indexed copy whose ``labels`` field records, for each new vertex,
the id it had in the graph it was derived from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import networkx as nx

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


def edge_id(u: int, v: int) -> Edge:
    """Canonical (lower, higher) form of an undirected edge."""
    if u == v:
        raise GraphError(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class Graph:
    vertex_count: int
    adjacency: tuple[frozenset[int], ...]
    labels: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.vertex_count)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=()) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in adj[u]:
                raise GraphError(f"parallel edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj), tuple(labels))

    @property
    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.vertex_count) for v in sorted(self.adjacency[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def vertices(self) -> range:
        return range(self.vertex_count)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.vertex_count and v in self.adjacency[u]

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.vertex_count):
            raise GraphError(f"unknown vertex {v!r}")

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < self.vertex_count

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.vertex_count))
        h.add_edges_from(self.edges)
        return h

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``, re-indexed in ascending order."""
        keep = sorted(set(keep))
        new_of = {old: i for i, old in enumerate(keep)}
        edges = [(new_of[u], new_of[v]) for u, v in self.edges if u in new_of and v in new_of]
        return Graph.from_edges(len(keep), edges, labels=keep)


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def max_degree(g: Graph) -> int:
    if g.vertex_count == 0:
        raise GraphError("max_degree of an empty graph")
    return max(len(a) for a in g.adjacency)


def count_neighbors_by_degree(g: Graph, v: int, lo: int, hi: float = math.inf) -> int:
    """Number of neighbours u of v with lo <= d(u) <= hi."""
    if lo > hi:
        raise GraphError(f"empty degree range [{lo}, {hi}]")
    adj = g.adjacency
    return sum(1 for u in g.neighbors(v) if lo <= len(adj[u]) <= hi)


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == g.vertex_count


def is_two_connected(g: Graph) -> bool:
    """Connected, at least three vertices and no cut vertex."""
    if g.vertex_count < 3 or not is_connected(g):
        return False
    return not any(True for _ in _articulation_points(g))


def _articulation_points(g: Graph) -> Iterator[int]:
    # iterative Hopcroft-Tarjan low-point DFS from vertex 0
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    children_of_root = 0
    disc[0] = low[0] = 0
    timer = 1
    stack = [(0, -1, iter(sorted(g.adjacency[0])))]
    reported = set()
    while stack:
        x, parent, it = stack[-1]
        advanced = False
        for y in it:
            if disc[y] == -1:
                disc[y] = low[y] = timer
                timer += 1
                if x == 0:
                    children_of_root += 1
                stack.append((y, x, iter(sorted(g.adjacency[y]))))
                advanced = True
                break
            if y != parent:
                low[x] = min(low[x], disc[y])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[x])
            if parent != 0 and low[x] >= disc[parent] and parent not in reported:
                reported.add(parent)
                yield parent
    if children_of_root > 1:
        yield 0


def blocks(g: Graph) -> list[Graph]:
    """Biconnected components (bridges included as single-edge blocks).

    Each block is re-indexed; ``labels`` maps block vertices to ids of ``g``.
    Order is deterministic: by the sorted label tuple of each block.
    """
    h = g.to_networkx()
    out = []
    for comp_edges in nx.biconnected_component_edges(h):
        es = [edge_id(u, v) for u, v in comp_edges]
        verts = sorted({x for e in es for x in e})
        new_of = {old: i for i, old in enumerate(verts)}
        out.append(Graph.from_edges(len(verts), [(new_of[u], new_of[v]) for u, v in es], labels=verts))
    out.sort(key=lambda b: (b.labels, b.edges))
    return out


def delete_edge(g: Graph, e: Edge) -> Graph:
    u, v = edge_id(*e)
    if not g.has_edge(u, v):
        raise GraphError(f"missing edge {(u, v)}")
    adj = list(g.adjacency)
    adj[u] = adj[u] - {v}
    adj[v] = adj[v] - {u}
    return Graph(g.vertex_count, tuple(adj))


def add_edge(g: Graph, e: Edge) -> Graph:
    u, v = edge_id(*e)
    g._check(u)
    g._check(v)
    if g.has_edge(u, v):
        raise GraphError(f"edge {(u, v)} already present")
    adj = list(g.adjacency)
    adj[u] = adj[u] | {v}
    adj[v] = adj[v] | {u}
    return Graph(g.vertex_count, tuple(adj))


def remove_vertex(g: Graph, v: int) -> Graph:
    g._check(v)
    return g.induced(x for x in g.vertices() if x != v)


def suppress_degree2(g: Graph, v: int) -> Graph:
    """Replace the path u-v-w through a 2-vertex v by the edge uw."""
    nbrs = g.neighbors(v)
    if len(nbrs) != 2:
        raise GraphError(f"vertex {v} has degree {len(nbrs)}, expected 2")
    u, w = sorted(nbrs)
    if g.has_edge(u, w):
        raise GraphError(f"suppressing {v} would duplicate edge {(u, w)}")
    h = remove_vertex(g, v)
    new_of = {old: i for i, old in enumerate(h.labels)}
    return Graph(h.vertex_count, add_edge(h, (new_of[u], new_of[w])).adjacency, h.labels)


def strip_degree2(g: Graph) -> Graph:
    """Induced subgraph on vertices of degree >= 3 (degrees measured in g)."""
    return g.induced(v for v in g.vertices() if len(g.adjacency[v]) >= 3)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.vertex_count
    out = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse "u v" lines (0-indexed, '#' comments).

    A line holding a single integer declares an isolated vertex id, so that
    written graphs round-trip even when their last vertices have no edges.
    """
    edges = []
    n = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {raw!r}") from None
        if len(nums) == 1 and nums[0] >= 0:
            n = max(n, nums[0] + 1)
            continue
        if len(nums) != 2 or min(nums) < 0:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = nums
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at {u}")
        edges.append(edge_id(u, v))
        n = max(n, u + 1, v + 1)
    if len(set(edges)) != len(edges):
        raise GraphError("parallel edges in edge list")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"# n={g.vertex_count} m={g.edge_count}"]
    covered = {x for e in g.edges for x in e}
    if g.vertex_count and (g.vertex_count - 1) not in covered:
        lines.append(str(g.vertex_count - 1))
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
