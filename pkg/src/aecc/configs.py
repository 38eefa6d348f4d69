"""Detectors for the unavoidable local structures A1-A8.

Each sub-configuration is a predicate over a vertex tuple, transcribed
literally (degree bounds, adjacency demands, neighbourhood sums, triangle
membership).  Detectors scan candidate tuples in lexicographic order, so the
witness returned is the lexicographically smallest tuple satisfying the
predicate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterator, Optional

from .graph import Graph

INF = math.inf


class Stats:
    """Per-graph degree data shared by all predicates.  Δ is the graph's own."""

    __slots__ = ("g", "adj", "d", "D", "n2", "n5", "n6")

    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adjacency
        d = [len(a) for a in g.adjacency]
        self.d = d
        self.D = max(d, default=0)
        self.n2 = [sum(1 for y in a if d[y] == 2) for a in g.adjacency]
        self.n5 = [sum(1 for y in a if d[y] <= 5) for a in g.adjacency]
        self.n6 = [sum(1 for y in a if d[y] >= 6) for a in g.adjacency]

    def cls(self, x: int, klo, khi, jlo, jhi) -> bool:
        """x is (S1, S2): degree in [klo, khi] and n_{6+}(x) in [jlo, jhi]."""
        return klo <= self.d[x] <= khi and jlo <= self.n6[x] <= jhi


def classify(g: Graph, v: int, s1: tuple, s2: tuple) -> bool:
    g._check(v)
    st = Stats(g)
    return st.cls(v, s1[0], s1[1], s2[0], s2[1])


@dataclass(frozen=True)
class Configuration:
    tag: str
    witness: tuple[int, ...]
    delta: int

    def holds(self, g: Graph, strict: bool = False) -> bool:
        st = Stats(g)
        spec = TAGS[self.tag]
        return (len(self.witness) == spec.arity and all(x in g for x in self.witness)
                and spec.predicate(st, self.witness, strict))

    def to_json(self) -> dict:
        return {"tag": self.tag, "witness": list(self.witness), "delta": self.delta}


# -- shared structural patterns ------------------------------------------------

def _distinct(t) -> bool:
    return len(set(t)) == len(t)


def _path2(s: Stats, t) -> bool:
    # path u v w with d(v) = 2
    u, v, w = t
    return _distinct(t) and s.d[v] == 2 and s.adj[v] == {u, w}


def _claw3(s: Stats, t) -> bool:
    # edge uv with N(v) = {u, v1, v2}
    u, v, v1, v2 = t
    return _distinct(t) and s.adj[v] == {u, v1, v2}


def _fan3(s: Stats, t) -> bool:
    # ... and u v1, u v2, v1 v2 in E(G)
    u, v, v1, v2 = t
    a = s.adj
    return _claw3(s, t) and v1 in a[u] and v2 in a[u] and v2 in a[v1]


def _a6(s: Stats, t) -> bool:
    u, v, u1, u2, u3 = t
    return _distinct(t) and s.d[u] == 4 and s.adj[u] == {v, u1, u2, u3}


def _a78(s: Stats, t, dv: int) -> bool:
    # 5-vertex u, N(u) = {v, u1..u4}, d(v) = dv, uv in the 3-cycles u v u3 and u v u4
    u, v, u1, u2, u3, u4 = t
    a = s.adj
    return (_distinct(t) and s.d[u] == 5 and s.d[v] == dv and a[u] == {v, u1, u2, u3, u4}
            and u3 in a[v] and u4 in a[v])


def _nsum(s: Stats, u: int, skip: Optional[int] = None) -> int:
    return sum(s.d[x] for x in s.adj[u] if x != skip)


def _triangles(s: Stats, u: int, v: int) -> int:
    return len(s.adj[u] & s.adj[v])


def _dmn2(s: Stats, x: int) -> int:
    return s.d[x] - s.n2[x]


# -- the predicates ------------------------------------------------------------

def a1_1(s, t, strict=False):
    u, v, w = t
    return _path2(s, t) and w not in s.adj[u]


def a1_2(s, t, strict=False):
    u, v, w = t
    return _path2(s, t) and w in s.adj[u] and s.d[u] <= 7


def a1_3(s, t, strict=False):
    u, v, w = t
    return _path2(s, t) and w in s.adj[u] and s.n5[u] >= s.d[u] - 6


def a2_1(s, t, strict=False):
    return s.d[t[0]] <= 7 and _claw3(s, t)


def a2_2(s, t, strict=False):
    u, v, v1, v2 = t
    a = s.adj
    return (s.cls(u, 8, 11, 0, 5) and _claw3(s, t)
            and v1 in a[u] and v2 in a[u] and v2 not in a[v1])


def a2_3(s, t, strict=False):
    u, v, v1, v2 = t
    a = s.adj
    return (s.cls(u, 8, 8, 0, 4) and _claw3(s, t) and s.cls(v2, 8, 11, 0, 5)
            and v1 in a[u] and v2 in a[v1] and v2 not in a[u])


def a2_4(s, t, strict=False):
    return s.d[t[0]] == 8 and _fan3(s, t)


def _a3(s, t) -> bool:
    return s.cls(t[0], 9, 9, 0, 5) and _fan3(s, t)


def a3_1(s, t, strict=False):
    u, v, v1, v2 = t
    return _a3(s, t) and _dmn2(s, v1) != s.D and _dmn2(s, v2) != s.D


def a3_2(s, t, strict=False):
    u, v, v1, v2 = t
    if not _a3(s, t):
        return False
    p = s.cls(v2, 9, 13, 0, 6)
    a = _dmn2(s, v1) != s.D
    b = s.n6[v1] <= s.D - s.d[v2] + 6
    # "v2 is X, and A or B": literal left-to-right grouping unless strict
    return (p and (a or b)) if strict else ((p and a) or b)


def a3_3(s, t, strict=False):
    u, v, v1, v2 = t
    return _a3(s, t) and s.cls(u, 9, 9, 0, 4) and s.cls(v2, 9, 13, 0, 5)


def a3_4(s, t, strict=False):
    u, v, v1, v2 = t
    D = s.D
    return (_a3(s, t) and 11 <= D <= 13 and s.cls(u, 9, 9, 0, 4)
            and s.cls(v1, D, D, 7, 7) and s.cls(v2, D, D, 6, 6))


def a3_5(s, t, strict=False):
    u, v, v1, v2 = t
    return (_a3(s, t) and s.cls(u, 9, 9, 0, 4) and s.cls(v1, 14, 14, 7, 7)
            and (s.cls(v2, 13, 13, 7, 7) or s.cls(v2, 14, 14, 0, 7)))


def a3_6(s, t, strict=False):
    u, v, v1, v2 = t
    return _a3(s, t) and s.cls(u, 9, 9, 5, 5) and s.cls(v2, 9, 13, 0, 4)


def a3_7(s, t, strict=False):
    u, v, v1, v2 = t
    D = s.D
    return (_a3(s, t) and 10 <= D <= 11 and s.cls(u, 9, 9, 5, 5)
            and s.cls(v1, D, D, 7, 7) and s.cls(v2, D, D, 5, 5))


def a3_8(s, t, strict=False):
    u, v, v1, v2 = t
    D = s.D
    return (_a3(s, t) and 12 <= D <= 13 and s.cls(u, 9, 9, 5, 5)
            and s.cls(v1, D, D, 7, 7) and s.cls(v2, D, D, 5, 6))


def _a4(s, t) -> bool:
    return s.cls(t[0], 10, 10, 0, 5) and _fan3(s, t)


def a4_1(s, t, strict=False):
    # "(d(v2), 4^-)": only the 6+-neighbour count of v2 is constrained
    return _a4(s, t) and s.n6[t[3]] <= 4


def a4_2(s, t, strict=False):
    u, v, v1, v2 = t
    return (_a4(s, t) and (s.cls(v2, 9, 9, 6, 6) or s.cls(v2, 10, 13, 5, 6))
            and s.n6[v1] <= s.D - s.d[v2] + 6)


def a4_3(s, t, strict=False):
    u, v, v1, v2 = t
    return _a4(s, t) and s.cls(v2, 10, 11, 5, 5) and _dmn2(s, v1) != s.D


def a4_4(s, t, strict=False):
    u, v, v1, v2 = t
    D = s.D
    return _a4(s, t) and 10 <= D <= 11 and s.cls(v1, D, D, 7, 7) and s.cls(v2, D, D, 5, 5)


def _a5(s, t) -> bool:
    return s.cls(t[0], 11, 11, 0, 5) and _fan3(s, t)


def a5_1(s, t, strict=False):
    u, v, v1, v2 = t
    return (_a5(s, t)
            and (s.cls(v1, 9, 14, 6, 6) or s.cls(v1, 11, 14, 0, 5))
            and (s.cls(v2, 9, 12, 6, 6) or s.cls(v2, 11, 12, 0, 5)))


def a5_2(s, t, strict=False):
    u, v, v1, v2 = t
    return _a5(s, t) and s.cls(v1, 13, INF, 7, 7) and s.cls(v2, 11, 11, 0, 5)


def a6_1(s, t, strict=False):
    u, v = t[0], t[1]
    return _a6(s, t) and s.d[v] in (4, 5) and _nsum(s, u) <= 2 * s.D + 13


def a6_2(s, t, strict=False):
    u, v = t[0], t[1]
    return _a6(s, t) and s.d[v] == 6 and _triangles(s, u, v) >= 1 and _nsum(s, u) <= 2 * s.D + 13


def a6_3(s, t, strict=False):
    u, v = t[0], t[1]
    return _a6(s, t) and s.d[v] in (5, 6) and _triangles(s, u, v) >= 2 and _nsum(s, u) <= 2 * s.D + 14


def a6_4(s, t, strict=False):
    u, v, u1, u2, u3 = t
    a = s.adj
    return (_a6(s, t) and s.cls(v, 7, 7, 0, 4) and u2 in a[u1] and u3 in a[u1]
            and u2 in a[v] and u3 in a[v] and min(s.d[u1], s.d[u2], s.d[u3]) <= 8)


def a7_1(s, t, strict=False):
    u, v, u1, u2, u3, u4 = t
    return _a78(s, t, 5) and s.d[u3] in (5, 6) and _nsum(s, u, v) <= 2 * s.D + 13


def a7_2(s, t, strict=False):
    u, v, u1, u2, u3, u4 = t
    return (_a78(s, t, 5) and s.d[u3] == 7 and min(s.d[u1], s.d[u2]) <= 6
            and _nsum(s, u, v) <= s.D + 20)


def a7_3(s, t, strict=False):
    u, v, u1, u2, u3, u4 = t
    return _a78(s, t, 5) and s.d[u3] == 8 and s.d[u1] == 6 and s.d[u2] == 6


def a8_1(s, t, strict=False):
    u, v, u1, u2, u3, u4 = t
    return _a78(s, t, 6) and s.d[u3] <= 6 and s.d[u4] <= 6 and min(s.d[u1], s.d[u2]) <= 7


def a8_2(s, t, strict=False):
    u, v, u1, u2, u3, u4 = t
    return (_a78(s, t, 6) and s.d[u3] <= 6 and s.cls(u4, 7, 7, 0, 4)
            and min(s.d[u1], s.d[u2]) <= 6)


def a8_3(s, t, strict=False):
    u, v, u1, u2, u3, u4 = t
    return (_a78(s, t, 6) and s.d[u3] <= 6 and s.cls(u4, 7, 7, 0, 4)
            and s.d[u1] <= 7 and s.d[u2] <= 7)


def a8_4(s, t, strict=False):
    u, v, u1, u2, u3, u4 = t
    return (_a78(s, t, 6) and s.cls(u3, 7, 7, 0, 4) and s.cls(u4, 7, 7, 0, 4)
            and s.d[u1] <= 6 and s.d[u2] <= 7)


# -- candidate generation ------------------------------------------------------

def _gen_path2(s: Stats, u: int) -> Iterator[tuple]:
    for v in sorted(s.adj[u]):
        if s.d[v] == 2:
            for w in sorted(s.adj[v] - {u}):
                yield (u, v, w)


def _gen_claw3(s: Stats, u: int) -> Iterator[tuple]:
    for v in sorted(s.adj[u]):
        if s.d[v] == 3:
            rest = sorted(s.adj[v] - {u})
            yield (u, v, rest[0], rest[1])
            yield (u, v, rest[1], rest[0])


def _gen_star(k: int, dv: Optional[int] = None) -> Callable[[Stats, int], Iterator[tuple]]:
    def gen(s: Stats, u: int) -> Iterator[tuple]:
        if s.d[u] != k:
            return
        for v in sorted(s.adj[u]):
            if dv is not None and s.d[v] != dv:
                continue
            for rest in permutations(sorted(s.adj[u] - {v})):
                yield (u, v) + rest
    return gen


@dataclass(frozen=True)
class TagSpec:
    tag: str
    arity: int
    predicate: Callable
    center: Callable[[Stats, int], bool]  # necessary condition on the first vertex
    candidates: Callable[[Stats, int], Iterator[tuple]]


def _deg_in(lo, hi):
    return lambda s, u: lo <= s.d[u] <= hi


_any = lambda s, u: True  # noqa: E731

_SPECS = [
    TagSpec("A1.1", 3, a1_1, _any, _gen_path2),
    TagSpec("A1.2", 3, a1_2, _deg_in(0, 7), _gen_path2),
    TagSpec("A1.3", 3, a1_3, _any, _gen_path2),
    TagSpec("A2.1", 4, a2_1, _deg_in(0, 7), _gen_claw3),
    TagSpec("A2.2", 4, a2_2, _deg_in(8, 11), _gen_claw3),
    TagSpec("A2.3", 4, a2_3, _deg_in(8, 8), _gen_claw3),
    TagSpec("A2.4", 4, a2_4, _deg_in(8, 8), _gen_claw3),
    *(TagSpec(f"A3.{i}", 4, p, _deg_in(9, 9), _gen_claw3)
      for i, p in enumerate([a3_1, a3_2, a3_3, a3_4, a3_5, a3_6, a3_7, a3_8], 1)),
    *(TagSpec(f"A4.{i}", 4, p, _deg_in(10, 10), _gen_claw3)
      for i, p in enumerate([a4_1, a4_2, a4_3, a4_4], 1)),
    TagSpec("A5.1", 4, a5_1, _deg_in(11, 11), _gen_claw3),
    TagSpec("A5.2", 4, a5_2, _deg_in(11, 11), _gen_claw3),
    *(TagSpec(f"A6.{i}", 5, p, _deg_in(4, 4), _gen_star(4))
      for i, p in enumerate([a6_1, a6_2, a6_3, a6_4], 1)),
    *(TagSpec(f"A7.{i}", 6, p, _deg_in(5, 5), _gen_star(5, 5))
      for i, p in enumerate([a7_1, a7_2, a7_3], 1)),
    *(TagSpec(f"A8.{i}", 6, p, _deg_in(5, 5), _gen_star(5, 6))
      for i, p in enumerate([a8_1, a8_2, a8_3, a8_4], 1)),
]

TAGS: dict[str, TagSpec] = {s.tag: s for s in _SPECS}
TAG_ORDER: tuple[str, ...] = tuple(s.tag for s in _SPECS)


def _scan(st: Stats, spec: TagSpec, strict: bool) -> Optional[tuple]:
    for u in st.g.vertices():
        if not spec.center(st, u):
            continue
        for t in spec.candidates(st, u):
            if spec.predicate(st, t, strict):
                return t
    return None


def detect(g: Graph, tag: str, strict: bool = False, stats: Optional[Stats] = None) -> Optional[Configuration]:
    """Lexicographically first witness of ``tag`` in g, or None.

    ``strict`` selects the nested reading P and (A or B) of A3.2's
    disjunction instead of the literal (P and A) or B.
    """
    spec = TAGS[tag]
    st = stats if stats is not None else Stats(g)
    t = _scan(st, spec, strict)
    return None if t is None else Configuration(tag, t, st.D)


def find_any_configuration(g: Graph, strict: bool = False) -> Optional[Configuration]:
    """First hit scanning tags in order A1.1 ... A8.4."""
    st = Stats(g)
    for tag in TAG_ORDER:
        cfg = detect(g, tag, strict, st)
        if cfg is not None:
            return cfg
    return None


def detect_all(g: Graph, strict: bool = False) -> dict[str, Optional[Configuration]]:
    st = Stats(g)
    return {tag: detect(g, tag, strict, st) for tag in TAG_ORDER}
