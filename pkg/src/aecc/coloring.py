"""Edge colourings, validity checks and alternating-path primitives.

Colours are 1-based.  Colour 0 means "uncoloured" in the text format only;
in memory an uncoloured edge is simply absent from the assignment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Optional

from .graph import Edge, Graph, GraphError, edge_id


class ColoringError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    palette_size: int
    assignment: Mapping[Edge, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.palette_size < 1:
            raise ColoringError("palette size must be >= 1")
        clean = {}
        for e, c in self.assignment.items():
            if not (1 <= c <= self.palette_size):
                raise ColoringError(f"colour {c} on {e} outside 1..{self.palette_size}")
            clean[edge_id(*e)] = c
        object.__setattr__(self, "assignment", MappingProxyType(dict(sorted(clean.items()))))

    def __getitem__(self, e: Edge) -> int:
        return self.assignment[edge_id(*e)]

    def get(self, e: Edge) -> Optional[int]:
        return self.assignment.get(edge_id(*e))

    def __len__(self) -> int:
        return len(self.assignment)

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.palette_size == other.palette_size and dict(self.assignment) == dict(other.assignment)

    def is_total(self, g: Graph) -> bool:
        return len(self.assignment) == g.edge_count and all(e in self.assignment for e in g.edges)

    def colors_used(self) -> set[int]:
        return set(self.assignment.values())

    def updated(self, changes: Mapping[Edge, Optional[int]]) -> "EdgeColoring":
        new = dict(self.assignment)
        for e, c in changes.items():
            if c is None:
                new.pop(edge_id(*e), None)
            else:
                new[edge_id(*e)] = c
        return EdgeColoring(self.palette_size, new)


@dataclass(frozen=True)
class Violation:
    kind: str  # "proper" | "bichromatic"
    edges: tuple[Edge, ...]
    colors: tuple[int, ...]
    cycle: tuple[int, ...] = ()
    vertex: Optional[int] = None

    def holds(self, g: Graph, c: EdgeColoring) -> bool:
        """Re-check the witness against the colouring."""
        if self.kind == "proper":
            e1, e2 = self.edges
            shared = set(e1) & set(e2)
            return (e1 != e2 and self.vertex in shared and g.has_edge(*e1) and g.has_edge(*e2)
                    and c.get(e1) == c.get(e2) == self.colors[0])
        cyc = self.cycle
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            return False
        es = [edge_id(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
        return all(g.has_edge(*e) for e in es) and {c.get(e) for e in es} == set(self.colors)

    def to_json(self) -> dict:
        out = {"kind": self.kind, "edges": [list(e) for e in self.edges], "colors": list(self.colors)}
        if self.kind == "proper":
            out["vertex"] = self.vertex
        else:
            out["cycle"] = list(self.cycle)
        return out


def _require_total(g: Graph, c: EdgeColoring) -> None:
    missing = [e for e in g.edges if e not in c.assignment]
    if missing:
        raise ColoringError(f"colouring is partial: {len(missing)} uncoloured edge(s), first {missing[0]}")
    extra = [e for e in c.assignment if not g.has_edge(*e)]
    if extra:
        raise ColoringError(f"colouring names non-edge {extra[0]}")


def check_proper(g: Graph, c: EdgeColoring) -> Optional[Violation]:
    """None if no two adjacent edges share a colour, else the first clash."""
    _require_total(g, c)
    for v in g.vertices():
        seen: dict[int, Edge] = {}
        for x in sorted(g.adjacency[v]):
            e = edge_id(v, x)
            col = c.assignment[e]
            if col in seen:
                return Violation("proper", (seen[col], e), (col,), vertex=v)
            seen[col] = e
    return None


def find_bichromatic_cycle(g: Graph, c: EdgeColoring) -> Optional[tuple[tuple[int, ...], int, int]]:
    """First bichromatic cycle over colour pairs in lexicographic order.

    Returns (cycle vertices, colour a, colour b) with a < b, the cycle starting at
    its smallest vertex and heading to the smaller of its two cycle neighbours.
    """
    if check_proper(g, c) is not None:
        raise ColoringError("find_bichromatic_cycle needs a proper colouring")
    at = _incidence(g, c)
    used = sorted(c.colors_used())
    for ia, a in enumerate(used):
        for b in used[ia + 1:]:
            cyc = _pair_cycle(g, at, a, b)
            if cyc is not None:
                return cyc, a, b
    return None


def _pair_cycle(g: Graph, at: list[dict[int, int]], a: int, b: int) -> Optional[tuple[int, ...]]:
    # proper => every vertex has <= 2 edges in the (a, b) subgraph; a component is
    # a cycle iff all of its vertices have both colours
    seen = set()
    for s in g.vertices():
        if s in seen or a not in at[s] or b not in at[s]:
            continue
        comp = [s]
        seen.add(s)
        closed = True
        stack = [s]
        while stack:
            x = stack.pop()
            for col in (a, b):
                y = at[x].get(col)
                if y is None:
                    closed = False
                elif y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        if closed:
            start = min(comp)
            first = min(at[start][a], at[start][b])
            cyc = [start]
            prev, cur = start, first
            while cur != start:
                cyc.append(cur)
                nxt = at[cur][a] if at[cur][a] != prev else at[cur][b]
                prev, cur = cur, nxt
            return tuple(cyc)
    return None


def check_acyclic(g: Graph, c: EdgeColoring) -> Optional[Violation]:
    v = check_proper(g, c)
    if v is not None:
        return v
    found = find_bichromatic_cycle(g, c)
    if found is None:
        return None
    cyc, a, b = found
    es = tuple(edge_id(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    return Violation("bichromatic", es, (a, b), cycle=cyc)


def is_acyclic(g: Graph, c: EdgeColoring) -> bool:
    return c.is_total(g) and check_acyclic(g, c) is None


def color_set(g: Graph, c: EdgeColoring, v: int) -> set[int]:
    out = set()
    for x in g.neighbors(v):
        col = c.assignment.get(edge_id(v, x))
        if col is not None:
            out.add(col)
    return out


def _incidence(g: Graph, c: EdgeColoring) -> list[dict[int, int]]:
    at: list[dict[int, int]] = [{} for _ in g.vertices()]
    for (u, v), col in c.assignment.items():
        at[u][col] = v
        at[v][col] = u
    return at


def _walk(at, start: int, first: int, second: int) -> list[int]:
    """Vertices of the alternating walk leaving ``start`` on colour ``first``."""
    path = [start]
    seen = {start}
    x, col, other = start, first, second
    while col in at[x]:
        y = at[x][col]
        path.append(y)
        if y in seen:
            break
        seen.add(y)
        x, col, other = y, other, col
    return path


def maximal_ab_path(g: Graph, c: EdgeColoring, u: int, a: int, b: int) -> tuple[int, ...]:
    """The maximal path from u whose edges alternate between colours a and b.

    Returns the vertex sequence; ``(u,)`` (no edges) when u has neither colour.
    """
    g._check(u)
    at = _incidence(g, c)
    has_a, has_b = a in at[u], b in at[u]
    if has_a and has_b:
        raise ColoringError(f"vertex {u} carries both colours {a} and {b}; the walk start is ambiguous")
    if not (has_a or has_b):
        return (u,)
    return tuple(_walk(at, u, a, b) if has_a else _walk(at, u, b, a))


def _component(at, u: int, a: int, b: int) -> set[int]:
    comp = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for col in (a, b):
            y = at[x].get(col)
            if y is not None and y not in comp:
                comp.add(y)
                stack.append(y)
    return comp


def exists_ab_path(g: Graph, c: EdgeColoring, u: int, w: int, a: int, b: int) -> bool:
    """True iff some path from u to w has edges alternately coloured a and b."""
    g._check(u)
    g._check(w)
    if u == w:
        return False
    return w in _component(_incidence(g, c), u, a, b)


def b_set(g: Graph, c: EdgeColoring, u_s: int, v_t: int, i: int) -> set[int]:
    at = _incidence(g, c)
    return {j for j in range(1, c.palette_size + 1)
            if j != i and u_s != v_t and v_t in _component(at, u_s, i, j)}


def kempe_swap(g: Graph, c: EdgeColoring, u: int, a: int, b: int) -> EdgeColoring:
    """Exchange colours a and b on the (a, b)-component containing u."""
    g._check(u)
    at = _incidence(g, c)
    comp = _component(at, u, a, b)
    changes = {}
    for x in comp:
        for col, new in ((a, b), (b, a)):
            y = at[x].get(col)
            if y is not None:
                changes[edge_id(x, y)] = new
    return c.updated(changes)


# -- mutable working table -----------------------------------------------------

class ColorTable:
    """Mutable colouring with O(1) colour-at-vertex lookups.

    Used by the search routines; convert with :meth:`freeze`.
    """

    def __init__(self, g: Graph, k: int, coloring: Optional[EdgeColoring] = None):
        self.g = g
        self.k = k
        self.at: list[dict[int, int]] = [{} for _ in g.vertices()]
        self.color: dict[Edge, int] = {}
        if coloring is not None:
            for e, col in coloring.assignment.items():
                self.assign(e, col)

    def assign(self, e: Edge, col: int) -> None:
        u, v = e
        self.at[u][col] = v
        self.at[v][col] = u
        self.color[edge_id(u, v)] = col

    def unassign(self, e: Edge) -> int:
        e = edge_id(*e)
        col = self.color.pop(e)
        u, v = e
        del self.at[u][col]
        del self.at[v][col]
        return col

    def recolor(self, e: Edge, col: int) -> int:
        old = self.unassign(e)
        self.assign(edge_id(*e), col)
        return old

    def free_at(self, u: int, col: int) -> bool:
        return col not in self.at[u]

    def colors_at(self, u: int) -> set[int]:
        return set(self.at[u])

    def edge_ok(self, e: Edge) -> bool:
        """Local check of a coloured edge: proper at both ends, and no bichromatic
        cycle through it.  Exact provided the rest of the table is acyclic."""
        x, y = e
        j = self.color[edge_id(x, y)]
        if self.at[x].get(j) != y or self.at[y].get(j) != x:
            return False
        for i in self.at[x]:
            if i != j and i in self.at[y] and self._reaches(x, y, i, j):
                return False
        return True

    def _reaches(self, x: int, y: int, i: int, j: int) -> bool:
        # walk from x along i (x's j-edge is xy itself); meeting y closes a cycle
        return y in _walk(self.at, x, i, j)[1:]

    def can_take(self, e: Edge, col: int) -> bool:
        """Would colouring the uncoloured edge e with col keep the table acyclic?"""
        x, y = e
        if col in self.at[x] or col in self.at[y]:
            return False
        ax, ay = self.at[x], self.at[y]
        small, big = (ax, ay) if len(ax) <= len(ay) else (ay, ax)
        for i in small:
            if i in big:
                if y in _walk(self.at, x, i, col):
                    return False
        return True

    def component(self, u: int, a: int, b: int) -> set[int]:
        return _component(self.at, u, a, b)

    def swap(self, u: int, a: int, b: int) -> list[Edge]:
        """Kempe swap in place; returns the edges whose colour changed."""
        comp = _component(self.at, u, a, b)
        changed = []
        for x in comp:
            for col in (a, b):
                y = self.at[x].get(col)
                if y is not None and x < y:
                    changed.append((x, y))
        olds = [(e, self.unassign(e)) for e in changed]
        for e, old in olds:
            self.assign(e, b if old == a else a)
        return changed

    def freeze(self) -> EdgeColoring:
        return EdgeColoring(self.k, dict(self.color))


def base_coloring(g: Graph, k: int) -> EdgeColoring:
    """Distinct colours 1..m in edge order; needs m <= k."""
    es = g.edges
    if len(es) > k:
        raise ColoringError(f"{len(es)} edges exceed palette {k}")
    return EdgeColoring(k, {e: i + 1 for i, e in enumerate(es)})


# -- coloring text format ---------------------------------------------------------

def parse_coloring(text: str, palette_size: Optional[int] = None) -> EdgeColoring:
    """Parse "u v color" lines; colour 0 marks an uncoloured edge."""
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            u, v, col = (int(p) for p in parts)
        except ValueError:
            raise ColoringError(f"line {lineno}: expected 'u v color', got {raw!r}") from None
        if col < 0:
            raise ColoringError(f"line {lineno}: negative colour")
        try:
            e = edge_id(u, v)
        except GraphError as exc:
            raise ColoringError(f"line {lineno}: {exc}") from None
        if e in entries:
            raise ColoringError(f"line {lineno}: edge {e} listed twice")
        entries[e] = col
    colored = {e: col for e, col in entries.items() if col}
    k = palette_size if palette_size is not None else max(colored.values(), default=1)
    return EdgeColoring(k, colored)


def format_coloring(g: Graph, c: EdgeColoring) -> str:
    lines = [f"# palette={c.palette_size} colors_used={len(c.colors_used())}"]
    lines.extend(f"{u} {v} {c.assignment.get((u, v), 0)}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def colors_of(c: EdgeColoring, edges: Iterable[Edge]) -> list[int]:
    return [c[e] for e in edges]
