"""Exact acyclic edge colouring by backtracking, for small graphs."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .coloring import ColorTable, EdgeColoring, check_acyclic
from .graph import Edge, Graph, GraphError, max_degree


class BudgetExceeded(RuntimeError):
    """The search hit its node or time cap before reaching a decision."""

    def __init__(self, nodes: int, seconds: float):
        super().__init__(f"budget exceeded after {nodes} nodes / {seconds:.2f}s")
        self.nodes = nodes
        self.seconds = seconds


@dataclass(frozen=True)
class OracleBudget:
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None

    def __post_init__(self):
        for name in ("max_nodes", "max_seconds"):
            val = getattr(self, name)
            if val is not None and val <= 0:
                raise ValueError(f"{name} must be positive")


UNLIMITED = OracleBudget()


class Meter:
    """Counts search nodes against a budget; one meter may span several searches."""

    def __init__(self, budget: Optional[OracleBudget] = None):
        self.budget = budget or UNLIMITED
        self.nodes = 0
        self.started = time.monotonic()

    def tick(self) -> None:
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise BudgetExceeded(self.nodes, time.monotonic() - self.started)
        if b.max_seconds is not None and not self.nodes & 255:
            spent = time.monotonic() - self.started
            if spent > b.max_seconds:
                raise BudgetExceeded(self.nodes, spent)


def default_order(g: Graph) -> list[Edge]:
    """Edges by descending endpoint-degree sum, ties by edge id."""
    adj = g.adjacency
    return sorted(g.edges, key=lambda e: (-(len(adj[e[0]]) + len(adj[e[1]])), e))


def exists_acyclic_coloring(g: Graph, k: int, budget: Optional[OracleBudget] = None,
                            order: Optional[Sequence[Edge]] = None,
                            hint: Optional[Mapping[Edge, int]] = None,
                            meter: Optional[Meter] = None) -> Optional[EdgeColoring]:
    """An acyclic edge k-colouring of g, or None if none exists.

    Raises BudgetExceeded when the budget runs out first.  ``hint`` gives a
    preferred colour per edge (tried first); colour-symmetry pruning is used
    only without a hint.
    """
    if k < 1:
        raise GraphError("palette size must be at least 1")
    edges = list(order) if order is not None else default_order(g)
    if sorted(edges) != g.edges:
        raise GraphError("order must list every edge exactly once")
    if not edges:
        return EdgeColoring(k, {})
    meter = meter or Meter(budget)
    symmetric = not hint
    t = ColorTable(g, k)
    n = len(edges)

    def candidates(e: Edge, top: int) -> list[int]:
        cols = list(range(1, (min(k, top + 1) if symmetric else k) + 1))
        if hint and hint.get(e) in cols:
            cols.remove(hint[e])
            cols.insert(0, hint[e])
        return cols

    its = [iter(candidates(edges[0], 0))]
    tops = [0]
    i = 0
    while True:
        e = edges[i]
        if e in t.color:
            t.unassign(e)
        for col in its[i]:
            meter.tick()
            if t.can_take(e, col):
                t.assign(e, col)
                break
        else:
            its.pop()
            tops.pop()
            i -= 1
            if i < 0:
                return None
            continue
        i += 1
        if i == n:
            out = t.freeze()
            if check_acyclic(g, out) is not None:  # pragma: no cover - internal consistency
                raise AssertionError("oracle produced an invalid colouring")
            return out
        tops.append(max(tops[-1], col))
        its.append(iter(candidates(edges[i], tops[-1])))


def acyclic_chromatic_index(g: Graph, budget: Optional[OracleBudget] = None) -> int:
    """Smallest k admitting an acyclic edge k-colouring, searching up from Delta.

    The budget is shared by all probes.  A graph without edges has index 0.
    """
    if g.vertex_count == 0:
        raise GraphError("acyclic_chromatic_index of an empty graph")
    if g.edge_count == 0:
        return 0
    meter = Meter(budget)
    k = max_degree(g)
    while exists_acyclic_coloring(g, k, meter=meter) is None:
        k += 1
    return k
