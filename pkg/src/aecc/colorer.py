"""Constructive acyclic edge colouring of planar graphs with Delta+5 colours.

The graph is reduced one configuration at a time until it has at most k
edges (k the palette size), coloured with distinct colours, and then rebuilt
in reverse.  Each re-inserted edge is coloured by the first rung that works:

1. a colour missing at both ends with no common colour at the ends,
2. a colour missing at both ends that closes no bichromatic cycle,
3. a short best-first search of recolourings and Kempe swaps at the ends,
4. exact backtracking on the whole current graph (hinted by the old colouring).

Vertex ids never change during a run: a merge leaves the suppressed vertex
behind as an isolated vertex, so one mutable colour table serves every level.
"""

from __future__ import annotations

import heapq
import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional

from .coloring import ColorTable, EdgeColoring, check_acyclic
from .configs import Configuration, find_any_configuration
from .embedding import NotPlanar, is_planar
from .graph import Edge, Graph, GraphError, add_edge, blocks, delete_edge, edge_id, max_degree
from .oracle import BudgetExceeded, Meter, OracleBudget, exists_acyclic_coloring

log = logging.getLogger(__name__)


class TheoremContradiction(RuntimeError):
    """Exhaustive search found no extension with Delta+5 colours on a planar graph."""

    def __init__(self, graph: Graph, coloring: Optional[EdgeColoring], message: str):
        super().__init__(message)
        self.graph = graph
        self.coloring = coloring


class ColoringFailed(RuntimeError):
    """No colouring exists (or none was found in budget) with an overridden palette."""


@dataclass(frozen=True)
class ColorerBudget:
    search_depth: int = 4
    search_nodes: int = 20_000
    fallback: OracleBudget = OracleBudget()

    def __post_init__(self):
        if self.search_depth < 0 or self.search_nodes < 0:
            raise ValueError("search limits must be non-negative")


@dataclass(frozen=True)
class ReductionStep:
    """One reduction.  ``removed`` edges are absent from the child, ``added``
    edges are new in it; the child with them swapped back is the parent."""

    kind: str  # "BaseDistinct" | "MergeA11" | "MergeA22" | "DeleteEdge"
    removed: tuple[Edge, ...] = ()
    added: tuple[Edge, ...] = ()
    config: Optional[Configuration] = None
    reason: str = ""

    @property
    def tag(self) -> Optional[str]:
        return self.config.tag if self.config else None

    def invert(self, child: Graph) -> Graph:
        g = child
        for e in self.added:
            g = delete_edge(g, e)
        for e in self.removed:
            g = add_edge(g, e)
        return g


@dataclass
class ExtendContext:
    """Colour sets around an uncoloured edge uv in a colour table."""

    uv: Edge
    palette: frozenset
    Cu: frozenset
    Cv: frozenset

    @classmethod
    def of(cls, t: ColorTable, uv: Edge) -> "ExtendContext":
        u, v = uv
        return cls(uv, frozenset(range(1, t.k + 1)), frozenset(t.at[u]), frozenset(t.at[v]))

    @property
    def A(self) -> frozenset:
        return self.Cu & self.Cv

    @property
    def T(self) -> frozenset:
        return self.palette - self.Cu - self.Cv

    def B(self, t: ColorTable, i: int) -> set[int]:
        """Colours j such that an (i, j)-path joins u and v."""
        u, v = self.uv
        return {j for j in self.palette - {i} if t._reaches(u, v, i, j)}


@dataclass
class StepRecord:
    """Trace entry.  rung 0 means the edge needed no ladder (base case or a
    merge lifted directly)."""

    tag: Optional[str]
    kind: str
    rung: Optional[int] = None
    nodes: int = 0

    def to_json(self) -> dict:
        return {"tag": self.tag, "kind": self.kind, "rung": self.rung, "nodes": self.nodes}


@dataclass
class ColoringResult:
    coloring: EdgeColoring
    trace: list[StepRecord] = field(default_factory=list)
    palette_size: int = 0
    blocks: int = 1

    def trace_json(self) -> list[dict]:
        return [r.to_json() for r in self.trace]


# -- reductions --------------------------------------------------------------

def _pendant(g: Graph) -> Optional[Edge]:
    for x, nb in enumerate(g.adjacency):
        if len(nb) == 1:
            return edge_id(x, next(iter(nb)))
    return None


def _fallback_edge(g: Graph) -> Edge:
    adj = g.adjacency
    x = min((v for v in g.vertices() if adj[v]), key=lambda v: (len(adj[v]), v))
    y = min(adj[x], key=lambda w: (len(adj[w]), w))
    return edge_id(x, y)


def reduce(g: Graph, cfg: Configuration, strict: bool = False) -> tuple[Graph, ReductionStep]:
    """Child graph and step for a configuration found in g."""
    if not cfg.holds(g, strict):
        raise GraphError(f"configuration {cfg.tag} at {cfg.witness} does not hold")
    w = cfg.witness
    if cfg.tag == "A1.1":
        u, v, x = w
        step = ReductionStep("MergeA11", (edge_id(u, v), edge_id(v, x)), (edge_id(u, x),), cfg)
    elif cfg.tag == "A2.2" and not g.has_edge(w[2], w[3]):
        u, v, v1, v2 = w
        step = ReductionStep("MergeA22", (edge_id(u, v), edge_id(v, v1), edge_id(v, v2)),
                             (edge_id(v1, v2),), cfg)
    else:
        step = ReductionStep("DeleteEdge", (edge_id(w[0], w[1]),), (), cfg)
    return _apply(g, step), step


def _apply(g: Graph, step: ReductionStep) -> Graph:
    for e in step.removed:
        g = delete_edge(g, e)
    for e in step.added:
        g = add_edge(g, e)
    return g


def _next_step(g: Graph, strict: bool) -> tuple[Graph, ReductionStep]:
    e = _pendant(g)
    if e is not None:
        step = ReductionStep("DeleteEdge", (e,), (), None, "pendant")
        return _apply(g, step), step
    cfg = find_any_configuration(g, strict)
    if cfg is not None:
        return reduce(g, cfg, strict)
    step = ReductionStep("DeleteEdge", (_fallback_edge(g),), (), None, "no configuration")
    return _apply(g, step), step


# -- extension ladder --------------------------------------------------------

class _Extender:
    def __init__(self, t: ColorTable, budget: ColorerBudget, planar: bool, strict_palette: bool):
        self.t = t
        self.budget = budget
        self.planar = planar
        self.strict_palette = strict_palette

    def free_pick(self, uv: Edge) -> Optional[int]:
        ctx = ExtendContext.of(self.t, uv)
        if ctx.A or not ctx.T:
            return None
        return min(ctx.T)

    def safe_pick(self, uv: Edge) -> Optional[int]:
        t = self.t
        u, v = uv
        for j in range(1, t.k + 1):
            if j not in t.at[u] and j not in t.at[v] and t.can_take(uv, j):
                return j
        return None

    def _blocked(self, uv: Edge) -> int:
        """0 iff some colour can be placed on uv; otherwise a distance estimate."""
        t = self.t
        u, v = uv
        au, av = t.at[u], t.at[v]
        best = None
        for j in range(1, t.k + 1):
            if j in au or j in av:
                continue
            bad = sum(1 for i in au if i in av and t._reaches(u, v, i, j))
            if best is None or bad < best:
                best = bad
                if bad == 0:
                    return 0
        if best is None:
            return 100 + len(set(au) | set(av)) - t.k + 1
        return best

    def _moves(self, uv: Edge):
        t = self.t
        u, v = uv
        for x in (u, v):
            for col, y in sorted(t.at[x].items()):
                e = edge_id(x, y)
                for c in range(1, t.k + 1):
                    if c != col and c not in t.at[x] and c not in t.at[y]:
                        yield ("recolor", e, c)
        for x in (u, v):
            for a in sorted(t.at[x]):
                for b in range(1, t.k + 1):
                    if b != a:
                        yield ("swap", x, a, b)

    def _do(self, move) -> Optional[list]:
        """Apply a move; return its undo record, or None (and leave the table
        unchanged) if it would break acyclicity."""
        t = self.t
        if move[0] == "recolor":
            _, e, c = move
            old = t.recolor(e, c)
            if t.edge_ok(e):
                return [("recolor", e, old)]
            t.recolor(e, old)
            return None
        _, x, a, b = move
        changed = t.swap(x, a, b)
        if all(t.edge_ok(e) for e in changed):
            return [("swap", x, a, b)]
        t.swap(x, a, b)
        return None

    def _undo(self, record) -> None:
        for rec in reversed(record):
            if rec[0] == "recolor":
                self.t.recolor(rec[1], rec[2])
            else:
                self.t.swap(*rec[1:])

    def search(self, uv: Edge) -> tuple[Optional[int], int]:
        """Best-first search over move sequences; leaves the table in the goal state."""
        b = self.budget
        if b.search_depth == 0 or b.search_nodes == 0:
            return None, 0
        counter = itertools.count()
        heap = [(self._blocked(uv), 0, next(counter), ())]
        nodes = 0
        while heap:
            _, depth, _, path = heapq.heappop(heap)
            if depth >= b.search_depth:
                continue
            undo_path = self._replay(path)
            for move in self._moves(uv):
                nodes += 1
                if nodes > b.search_nodes:
                    self._undo(undo_path)
                    return None, nodes
                rec = self._do(move)
                if rec is None:
                    continue
                h = self._blocked(uv)
                if h == 0:
                    col = self.safe_pick(uv)
                    if col is not None:
                        return col, nodes
                self._undo(rec)
                heapq.heappush(heap, (h, depth + 1, next(counter), path + (move,)))
            self._undo(undo_path)
        return None, nodes

    def _replay(self, path) -> list:
        undo = []
        for move in path:
            rec = self._do(move)
            if rec is None:  # pragma: no cover - moves were valid when recorded
                raise AssertionError("stale search path")
            undo.extend(rec)
        return undo

    def exhaustive(self, g: Graph, focus: Edge) -> tuple[EdgeColoring, int]:
        """Rung 4: backtracking on g, edges far from focus first."""
        t = self.t
        dist = _edge_distance(g, focus)
        order = sorted(g.edges, key=lambda e: (-dist[e], e))
        meter = Meter(self.budget.fallback)
        try:
            found = exists_acyclic_coloring(g, t.k, order=order, hint=dict(t.color), meter=meter)
        except BudgetExceeded:
            found = None
            if not self.strict_palette:
                raise
        if found is None:
            if self.strict_palette and self.planar:
                raise TheoremContradiction(g, t.freeze(), f"no acyclic {t.k}-colouring found for a planar graph")
            raise ColoringFailed(f"no acyclic edge colouring with {t.k} colours")
        return found, meter.nodes

    def extend(self, g: Graph, pending: list[Edge], record: StepRecord) -> None:
        """Colour the uncoloured ``pending`` edges of g (all other edges coloured)."""
        t = self.t
        rung = 0
        for i, uv in enumerate(pending):
            col = self.free_pick(uv)
            level = 1
            if col is None:
                col, level = self.safe_pick(uv), 2
            if col is None:
                col, nodes = self.search(uv)
                record.nodes += nodes
                level = 3
            if col is None:
                found, nodes = self.exhaustive(g, uv)
                record.nodes += nodes
                for e in list(t.color):
                    t.unassign(e)
                for e, c in found.assignment.items():
                    t.assign(e, c)
                record.rung = 4
                return
            t.assign(uv, col)
            if not t.edge_ok(uv):  # pragma: no cover - every rung checks this
                raise AssertionError(f"rung {level} produced a bad colour on {uv}")
            rung = max(rung, level)
        record.rung = rung


def _edge_distance(g: Graph, focus: Edge) -> dict[Edge, int]:
    dist_v = {focus[0]: 0, focus[1]: 0}
    frontier = list(focus)
    while frontier:
        nxt = []
        for x in frontier:
            for y in g.adjacency[x]:
                if y not in dist_v:
                    dist_v[y] = dist_v[x] + 1
                    nxt.append(y)
        frontier = nxt
    far = g.vertex_count + 1
    return {e: min(dist_v.get(e[0], far), dist_v.get(e[1], far)) for e in g.edges}


def lift_merge(t: ColorTable, step: ReductionStep) -> list[Edge]:
    """Undo a merge on the colour table; return the edges still uncoloured.

    For A1.1 (u, v, w) the child edge uw hands its colour to vw and uv takes
    the least colour missing at u in the child.  For A2.2 (u, v, v1, v2) the
    child edge v1v2 hands its colour to vv1; vv2 and uv are left to the ladder.
    """
    if step.kind == "MergeA11":
        u, v, w = step.config.witness
        col = t.unassign(edge_id(u, w))
        t.assign(edge_id(v, w), col)
        spare = min(c for c in range(1, t.k + 1) if c not in t.at[u] and c != col)
        t.assign(edge_id(u, v), spare)
        if t.edge_ok(edge_id(u, v)) and t.edge_ok(edge_id(v, w)):
            return []
        t.unassign(edge_id(u, v))
        return [edge_id(u, v)]
    if step.kind == "MergeA22":
        u, v, v1, v2 = step.config.witness
        col = t.unassign(edge_id(v1, v2))
        t.assign(edge_id(v, v1), col)
        if not t.edge_ok(edge_id(v, v1)):  # pragma: no cover - v is a fresh vertex
            t.unassign(edge_id(v, v1))
            return [edge_id(v, v1), edge_id(v, v2), edge_id(u, v)]
        return [edge_id(v, v2), edge_id(u, v)]
    raise GraphError(f"{step.kind} is not a merge")


def extend(g: Graph, c_child: EdgeColoring, step: ReductionStep,
           budget: Optional[ColorerBudget] = None) -> EdgeColoring:
    """Colour parent g from a colouring of the child produced by ``step``."""
    t = ColorTable(g, c_child.palette_size, c_child)
    rec = StepRecord(step.tag, step.kind)
    ext = _Extender(t, budget or ColorerBudget(), planar=True, strict_palette=True)
    if step.kind.startswith("Merge"):
        pending = lift_merge(t, step)
    else:
        pending = list(step.removed)
    ext.extend(g, pending, rec)
    out = t.freeze()
    if check_acyclic(g, out) is not None:  # pragma: no cover
        raise AssertionError("extension produced an invalid colouring")
    return out


# -- driver ------------------------------------------------------------------

def _color_connected(g: Graph, k: int, budget: ColorerBudget, strict: bool,
                     planar: bool, strict_palette: bool) -> tuple[EdgeColoring, list[StepRecord]]:
    chain: list[tuple[Graph, ReductionStep]] = []
    cur = g
    while cur.edge_count > k:
        child, step = _next_step(cur, strict)
        chain.append((cur, step))
        cur = child
    t = ColorTable(cur, k)
    for i, e in enumerate(cur.edges, 1):
        t.assign(e, i)
    records = [StepRecord(None, "BaseDistinct", 0, 0)]
    ext = _Extender(t, budget, planar, strict_palette)
    for parent, step in reversed(chain):
        t.g = parent
        rec = StepRecord(step.tag, step.kind)
        if step.kind.startswith("Merge"):
            pending = lift_merge(t, step)
        else:
            pending = list(step.removed)
        ext.extend(parent, pending, rec)
        log.debug("extended %s %s rung=%s nodes=%d", step.kind, step.tag, rec.rung, rec.nodes)
        records.append(rec)
    return t.freeze(), records


def _permute_into(target: dict[Edge, int], block_col: dict[Edge, int], cut: int, k: int) -> dict[Edge, int]:
    """Rename the block's colours so none clashes with target's colours at cut."""
    taken = {c for e, c in target.items() if cut in e}
    mine = sorted({c for e, c in block_col.items() if cut in e})
    mapping: dict[int, int] = {}
    spare = iter(c for c in range(1, k + 1) if c not in taken and c not in mine)
    for c in mine:
        mapping[c] = c if c not in taken else next(spare)
    rest_src = [c for c in range(1, k + 1) if c not in mapping]
    rest_dst = [c for c in range(1, k + 1) if c not in mapping.values()]
    mapping.update(zip(rest_src, rest_dst))
    return {e: mapping[c] for e, c in block_col.items()}


def color_planar(g: Graph, budget: Optional[ColorerBudget] = None, palette_size: Optional[int] = None,
                 strict: bool = False, require_planar: bool = True) -> ColoringResult:
    """Acyclic edge colouring of g with palette_size (default Delta+5) colours.

    Graphs that are not 2-connected are coloured block by block and the
    blocks' colours renamed at cut vertices.
    """
    planar = is_planar(g)
    if require_planar and not planar:
        raise NotPlanar("graph is not planar")
    budget = budget or ColorerBudget()
    if g.edge_count == 0:
        return ColoringResult(EdgeColoring(palette_size or 1, {}), [], palette_size or 1, 0)
    k = max_degree(g) + 5
    strict_palette = palette_size is None or palette_size >= k
    if palette_size is not None:
        k = palette_size
    if k < max_degree(g):
        raise ColoringFailed(f"palette of {k} colours is below the maximum degree")

    parts = blocks(g)
    coloured: dict[Edge, int] = {}
    trace: list[StepRecord] = []
    done_vertices: set[int] = set()
    pending = list(range(len(parts)))
    if len(parts) > 1:
        log.info("input is not 2-connected: colouring %d blocks separately", len(parts))
    while pending:
        # next block: one touching the coloured part if any, else the first left
        idx = next((i for i in pending if done_vertices.intersection(parts[i].labels)), pending[0])
        pending.remove(idx)
        b = parts[idx]
        col, recs = _color_connected(b, k, budget, strict, planar, strict_palette)
        trace.extend(recs)
        lab = b.labels
        block_col = {edge_id(lab[x], lab[y]): c for (x, y), c in col.assignment.items()}
        cuts = done_vertices.intersection(lab)
        if cuts:
            (cut,) = cuts
            block_col = _permute_into(coloured, block_col, cut, k)
        coloured.update(block_col)
        done_vertices.update(lab)
    out = EdgeColoring(k, coloured)
    bad = check_acyclic(g, out)
    if bad is not None:  # pragma: no cover - each extension is verified locally
        raise AssertionError(f"final colouring fails verification: {bad}")
    return ColoringResult(out, trace, k, len(parts))
