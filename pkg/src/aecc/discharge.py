"""Exact discharging on the stripped plane graph H.

H is G with every 2-vertex deleted (one connected component of it).  Vertices
and faces of H start with charge 4 - degree, which sums to 8 by Euler's
formula; rules R1-R5 then move charge around.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .configs import TAG_ORDER, detect_all
from .embedding import PlaneEmbedding, embed
from .graph import Graph, GraphError, components, edge_id, strip_degree2

ZERO = Fraction(0)
THIRD = Fraction(1, 3)


class DischargeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class StrippedGraph:
    """H together with its provenance in G."""

    graph: Graph
    labels: tuple[int, ...]      # H vertex -> G vertex
    degree_in_g: tuple[int, ...]  # d_G of each H vertex
    component: int

    @property
    def degree_in_h(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.graph.adjacency)


def build_H(g: Graph, component: Optional[int] = None) -> StrippedGraph:
    """Delete all 2-vertices of g and keep one connected component.

    Components are ordered by their smallest G vertex; by default the one with
    the most vertices is taken (ties to the earliest).
    """
    stripped = strip_degree2(g)
    comps = components(stripped)
    if not comps:
        raise DischargeError("H is empty: g has no vertex of degree >= 3")
    if component is None:
        component = max(range(len(comps)), key=lambda i: (len(comps[i]), -i))
    if not 0 <= component < len(comps):
        raise DischargeError(f"component {component} out of range (H has {len(comps)})")
    h = stripped.induced(comps[component])
    labels = tuple(stripped.labels[x] for x in h.labels)
    return StrippedGraph(Graph(h.vertex_count, h.adjacency), labels,
                         tuple(len(g.adjacency[x]) for x in labels), component)


def alpha(k: int, n5minus: int) -> Fraction:
    """Per-vertex transfer quantum for an H-vertex of degree k >= 6 having
    n5minus >= 1 neighbours of H-degree at most 5."""
    if k < 6 or not 1 <= n5minus <= k:
        raise DischargeError(f"alpha undefined for k={k}, n={n5minus}")
    if n5minus <= k // 2:
        return Fraction(k - 6, 3 * n5minus) + THIRD
    return 1 - Fraction(4, k)


@dataclass(frozen=True)
class Transfer:
    rule: str
    source: str
    sink: str
    amount: Fraction
    via: Optional[str] = None

    def to_json(self) -> dict:
        return {"rule": self.rule, "source": self.source, "sink": self.sink,
                "amount": _q(self.amount), "via": self.via}


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass
class ChargeLedger:
    vertex_charge: dict[int, Fraction]
    face_charge: dict[int, Fraction]
    transfers: list[Transfer] = field(default_factory=list)
    near_misses: list[str] = field(default_factory=list)

    def copy(self) -> "ChargeLedger":
        return ChargeLedger(dict(self.vertex_charge), dict(self.face_charge),
                            list(self.transfers), list(self.near_misses))

    def charge(self, element: str) -> Fraction:
        kind, i = element[0], int(element[1:])
        return (self.vertex_charge if kind == "v" else self.face_charge)[i]

    def move(self, rule: str, source: str, sink: str, amount: Fraction, via: Optional[str] = None) -> None:
        if amount == 0:
            return
        for name, delta in ((source, -amount), (sink, amount)):
            table = self.vertex_charge if name[0] == "v" else self.face_charge
            table[int(name[1:])] += delta
        self.transfers.append(Transfer(rule, source, sink, amount, via))


def initial_charges(e: PlaneEmbedding) -> ChargeLedger:
    g = e.graph
    return ChargeLedger({v: Fraction(4 - len(g.adjacency[v])) for v in g.vertices()},
                        {i: Fraction(4 - f.degree) for i, f in enumerate(e.faces)})


def total_charge(ledger: ChargeLedger) -> Fraction:
    return sum(ledger.vertex_charge.values(), ZERO) + sum(ledger.face_charge.values(), ZERO)


class _Ctx:
    """Degree and alpha lookups on an embedded H."""

    def __init__(self, e: PlaneEmbedding):
        self.e = e
        g = e.graph
        self.adj = g.adjacency
        self.d = [len(a) for a in g.adjacency]
        self.n5 = [sum(1 for y in a if self.d[y] <= 5) for a in g.adjacency]
        self._alpha: dict[int, Fraction] = {}

    def alpha(self, x: int) -> Fraction:
        if x not in self._alpha:
            self._alpha[x] = alpha(self.d[x], self.n5[x])
        return self._alpha[x]

    def fdeg(self, f: int) -> int:
        return self.e.faces[f].degree

    def across(self, f: int, x: int, y: int) -> int:
        return self.e.other_face(edge_id(x, y), f)

    def triangles(self):
        for i, f in enumerate(self.e.faces):
            if f.degree == 3:
                yield i, sorted(f.vertices)

    def m3(self, u: int) -> int:
        return sum(1 for f in self.e.faces_at(u) if self.fdeg(f) == 3)


def apply_rules(e: PlaneEmbedding, ledger: ChargeLedger, lenient: bool = False) -> ChargeLedger:
    """Run R1, R2, R3 to completion, then R4, then R5.

    Degree thresholds are H-degrees.  With ``lenient`` set, R4 candidates that
    miss the literal pattern are recorded in ``near_misses``.
    """
    out = ledger.copy()
    c = _Ctx(e)
    d = c.d

    # R1: a 4^- vertex pays alpha/2 through each face of an edge to a 6+ neighbour
    for u in e.graph.vertices():
        if d[u] > 4:
            continue
        for v in sorted(c.adj[u]):
            if d[v] < 6:
                continue
            f1, f2 = e.faces_of_edge((u, v))
            if c.fdeg(f1) >= 4 and c.fdeg(f2) >= 4:
                half = c.alpha(v) / 2
                out.move("R1", f"v{u}", f"v{v}", half, f"f{f1}")
                out.move("R1", f"v{u}", f"v{v}", half, f"f{f2}")

    tri = list(c.triangles())

    # R2: a 3-face on 6+ vertices only gives 1/3 to each corner
    for fi, vs in tri:
        if min(d[x] for x in vs) >= 6:
            for x in vs:
                out.move("R2", f"f{fi}", f"v{x}", THIRD)

    # R3: a 3-face with a 5^- corner pays its 6+ corners
    for fi, vs in tri:
        small = [y for y in vs if d[y] <= 5]
        if not small:
            continue
        for x in vs:
            if d[x] < 6:
                continue
            out.move("R3.1", f"f{fi}", f"v{x}", c.alpha(x), f"f{fi}")
            for y in small:
                g2 = c.across(fi, y, x)
                if c.fdeg(g2) >= 4:
                    out.move("R3.2", f"f{fi}", f"v{x}", c.alpha(x) / 2, f"f{g2}")

    # R4: 4-vertex u with four incident 3-faces, 5-neighbour v
    for u in e.graph.vertices():
        if d[u] != 4:
            continue
        for v in sorted(c.adj[u]):
            if d[v] != 5:
                continue
            amount = _r4_amount(c, u, v)
            if amount is None:
                if lenient:
                    f1, f2 = e.faces_of_edge((u, v))
                    if c.fdeg(f1) == 3 and c.fdeg(f2) == 3:
                        out.near_misses.append(f"R4 at edge ({u},{v}): m3({u})={c.m3(u)} < 4")
                continue
            rule, tau = amount
            f1, f2 = e.faces_of_edge((u, v))
            out.move(rule, f"f{f1}", f"v{v}", tau / 2)
            out.move(rule, f"f{f2}", f"v{v}", tau / 2)

    # R5: 3-faces whose minimum degree is exactly 5
    for fi, vs in tri:
        if min(d[x] for x in vs) != 5:
            continue
        fives = [x for x in vs if d[x] == 5]
        beta = out.face_charge[fi]
        if beta >= 0:
            for x in fives:
                out.move("R5.1", f"f{fi}", f"v{x}", beta / len(fives))
        if len(fives) == 1:
            u = fives[0]
            v, w = [x for x in vs if x != u]
            s = c.alpha(v) + c.alpha(w)
            if s >= 1:
                out.move("R5.2", f"v{u}", f"f{fi}", s - 1)
    return out


def _r4_amount(c: _Ctx, u: int, v: int) -> Optional[tuple[str, Fraction]]:
    if c.m3(u) != 4:
        return None
    f, f_star = c.e.faces_of_edge((u, v))
    if f == f_star or c.fdeg(f) != 3 or c.fdeg(f_star) != 3:
        return None
    (w,) = c.e.faces[f].vertices - {u, v}
    (w_star,) = c.e.faces[f_star].vertices - {u, v}
    a = c.fdeg(c.across(f, v, w))
    b = c.fdeg(c.across(f_star, v, w_star))
    if min(a, b) == 3 and max(a, b) >= 4:
        return "R4.1", Fraction(1, 10)
    if a == b == 3:
        return "R4.2", Fraction(2, 5)
    return None


def audit_transfers(e: PlaneEmbedding, ledger: ChargeLedger) -> list[Transfer]:
    """Transfers whose rule guard or amount does not re-check against e."""
    c = _Ctx(e)
    d = c.d
    faces = e.faces
    bad = []

    def fv(name):
        return int(name[1:])

    r3_out: dict[int, Fraction] = {}
    for t in ledger.transfers:
        if t.rule.startswith("R3"):
            r3_out[fv(t.source)] = r3_out.get(fv(t.source), ZERO) + t.amount

    for t in ledger.transfers:
        ok = False
        try:
            if t.rule == "R1":
                u, v, f = fv(t.source), fv(t.sink), fv(t.via)
                fs = e.faces_of_edge((u, v))
                ok = (d[u] <= 4 and d[v] >= 6 and f in fs and all(faces[x].degree >= 4 for x in fs)
                      and t.amount == c.alpha(v) / 2)
            elif t.rule == "R2":
                f, x = fv(t.source), fv(t.sink)
                ok = (faces[f].degree == 3 and x in faces[f].vertices
                      and min(d[y] for y in faces[f].vertices) >= 6 and t.amount == THIRD)
            elif t.rule in ("R3.1", "R3.2"):
                f, x = fv(t.source), fv(t.sink)
                vs = faces[f].vertices
                ok = faces[f].degree == 3 and x in vs and d[x] >= 6 and min(d[y] for y in vs) <= 5
                if ok and t.rule == "R3.1":
                    ok = t.amount == c.alpha(x)
                elif ok:
                    g2 = fv(t.via)
                    ok = (faces[g2].degree >= 4 and t.amount == c.alpha(x) / 2
                          and any(d[y] <= 5 and e.other_face(edge_id(x, y), f) == g2 for y in vs if y != x))
            elif t.rule in ("R4.1", "R4.2"):
                f, v = fv(t.source), fv(t.sink)
                for u in faces[f].vertices:
                    if d[u] == 4 and d[v] == 5 and v in c.adj[u] and f in e.faces_of_edge((u, v)):
                        got = _r4_amount(c, u, v)
                        if got is not None and got[0] == t.rule and got[1] / 2 == t.amount:
                            ok = True
            elif t.rule == "R5.1":
                f, x = fv(t.source), fv(t.sink)
                vs = faces[f].vertices
                fives = [y for y in vs if d[y] == 5]
                beta = 1 - r3_out.get(f, ZERO)
                ok = (faces[f].degree == 3 and min(d[y] for y in vs) == 5 and d[x] == 5
                      and beta >= 0 and t.amount == beta / len(fives))
            elif t.rule == "R5.2":
                u, f = fv(t.source), fv(t.sink)
                vs = faces[f].vertices
                others = [y for y in vs if y != u]
                ok = (faces[f].degree == 3 and u in vs and d[u] == 5 and len(others) == 2
                      and all(d[y] >= 6 for y in others)
                      and t.amount == c.alpha(others[0]) + c.alpha(others[1]) - 1 > 0)
        except (GraphError, DischargeError, KeyError, TypeError, ValueError):
            ok = False
        if not ok:
            bad.append(t)
    return bad


@dataclass(frozen=True)
class FinalCharge:
    element: str
    charge: Fraction
    positive: bool


def final_report(ledger: ChargeLedger) -> list[FinalCharge]:
    """Per-element final charges; positive ones are discharging-lemma
    counterexample candidates."""
    rows = [(f"v{v}", q) for v, q in sorted(ledger.vertex_charge.items())]
    rows += [(f"f{f}", q) for f, q in sorted(ledger.face_charge.items())]
    return [FinalCharge(name, q, q > 0) for name, q in rows]


def discharge(g: Graph, component: Optional[int] = None, lenient: bool = False):
    """build_H, embed, charge and discharge.  Returns (H, embedding, initial, final)."""
    h = build_H(g, component)
    emb = embed(h.graph)
    start = initial_charges(emb)
    return h, emb, start, apply_rules(emb, start, lenient)


def discharge_report(g: Graph, component: Optional[int] = None, lenient: bool = False) -> dict:
    h, emb, start, end = discharge(g, component, lenient)
    return {
        "h": {"vertices": list(h.labels), "degree_in_g": list(h.degree_in_g),
              "degree_in_h": list(h.degree_in_h), "component": h.component},
        "faces": [list(f.walk()) for f in emb.faces],
        "initial": {"vertices": {f"v{v}": _q(q) for v, q in start.vertex_charge.items()},
                    "faces": {f"f{f}": _q(q) for f, q in start.face_charge.items()},
                    "total": _q(total_charge(start))},
        "transfers": [t.to_json() for t in end.transfers],
        "final": [{"element": r.element, "charge": _q(r.charge), "positive": r.positive}
                  for r in final_report(end)],
        "total": _q(total_charge(end)),
        "near_misses": list(end.near_misses),
    }


# -- structural lemmas ------------------------------------------------------------

_A1 = ("A1.1", "A1.2", "A1.3")
_A6 = ("A6.1", "A6.2", "A6.3", "A6.4")
_GATES = {
    "L1.1": ("A1.1", "A1.2"),
    "L1.2": ("A1.1", "A1.3"),
    "L1.3": _A1,
    "L1.4": _A1 + ("A2.1",),
    "L2.1": _A1 + ("A2.1",),
    "L2.2": _A1 + ("A2.1",) + _A6,
    "L3": _A1 + ("A2.1",) + _A6,
}


@dataclass(frozen=True)
class LemmaViolation:
    clause: str
    element: tuple[int, ...]
    detail: str


def check_structural_lemmas(g: Graph, component: Optional[int] = None) -> list[LemmaViolation]:
    """Check each structural-lemma clause whose configuration-absence
    hypothesis holds in g; vertex ids in the result are G ids."""
    present = {tag for tag, cfg in detect_all(g).items() if cfg is not None}
    live = {cl for cl, gate in _GATES.items() if not present.intersection(gate)}
    if not live:
        return []
    out: list[LemmaViolation] = []
    adj = g.adjacency
    d = [len(a) for a in adj]
    hv = {x for x in g.vertices() if d[x] >= 3}
    dh = {x: sum(1 for y in adj[x] if y in hv) for x in hv}

    def n_g(x, lo, hi):
        return sum(1 for y in adj[x] if lo <= d[y] <= hi)

    def n_h(x, lo, hi):
        return sum(1 for y in adj[x] if y in hv and lo <= dh[y] <= hi)

    def bad(clause, el, msg):
        out.append(LemmaViolation(clause, tuple(el), msg))

    for u in sorted(hv):
        if "L1.1" in live and 3 <= d[u] <= 7 and dh[u] != d[u]:
            bad("L1.1", [u], f"d={d[u]} but d_H={dh[u]}")
        if "L1.2" in live and d[u] >= 8 and dh[u] < 7:
            bad("L1.2", [u], f"d={d[u]} but d_H={dh[u]}")
        if "L1.3" in live:
            n2 = n_g(u, 2, 2)
            checks = [dh[u] >= 3, n_h(u, 2, 2) == 0,
                      all(n_h(u, k, k) == n_g(u, k, k) for k in range(3, 7)),
                      n_h(u, 0, 5) == n_g(u, 0, 5) - n2, n_h(u, 6, 10**9) == n_g(u, 6, 10**9)]
            if not all(checks):
                bad("L1.3", [u], "neighbour counts differ between G and H")
        if "L1.4" in live and d[u] >= 8 and not (n_h(u, 0, 5) <= dh[u] - 7 and n_h(u, 6, 10**9) >= 7):
            bad("L1.4", [u], "8+-vertex with too many 5^- neighbours in H")

    for u in sorted(hv):
        for v in sorted(adj[u]):
            if v not in hv:
                continue
            if "L2.1" in live and d[v] == 3 and not (d[u] >= 8 and dh[u] >= 8):
                bad("L2.1", [u, v], f"3-vertex {v} adjacent to d={d[u]}, d_H={dh[u]}")
            if "L2.2" in live and d[u] == 4:
                others = sorted(adj[u] - {v})
                tri = adj[u] & adj[v]
                bounds = []
                if d[v] == 4:
                    bounds.append(("2.1", 10))
                if d[v] == 5:
                    bounds.append(("2.2", 9))
                if d[v] == 6 and len(tri) >= 1:
                    bounds.append(("2.3", 8))
                if d[v] == 5 and len(tri) >= 2:
                    bounds.append(("2.4", 10))
                if d[v] == 6 and len(tri) >= 2:
                    bounds.append(("2.5", 9))
                if d[v] == 7 and n_g(v, 6, 10**9) <= 4 and len(tri) >= 2:
                    for u1 in others:
                        rest = [x for x in others if x != u1]
                        if set(rest) <= tri and all(x in adj[u1] for x in rest):
                            bounds.append(("2.6", 9))
                            break
                for tag, lo in bounds:
                    for ui in others:
                        if d[ui] < lo or ui not in hv or dh[ui] < 8:
                            bad("L2.2", [u, v, ui], f"({tag}) needs d>={lo} and d_H>=8, "
                                                    f"got d={d[ui]}, d_H={dh.get(ui, 0)}")

    if "L3" in live and hv:
        h = build_H(g, component)
        emb = embed(h.graph)
        ctx = _Ctx(emb)
        small = [x for x in h.graph.vertices() if ctx.d[x] <= 4]
        f3 = {x: {f for f in emb.faces_at(x) if ctx.fdeg(f) == 3} for x in small}
        lab = h.labels
        for i, a in enumerate(small):
            for b in small[i + 1:]:
                da, db = ctx.d[a], ctx.d[b]
                adjacent = b in ctx.adj[a]
                hyp = (3 in (da, db) and max(da, db) <= 4) or (da == db == 4 and not adjacent)
                if hyp and f3[a] & f3[b]:
                    bad("L3.1", [lab[a], lab[b]], "share a 3-face")
        pairs = [(a, b) for a in small for b in small if a < b and ctx.d[a] == ctx.d[b] == 4 and b in ctx.adj[a]]
        for a, b in pairs:
            both = f3[a] | f3[b]
            for x in small:
                if x not in (a, b) and both & f3[x]:
                    bad("L3.2", [lab[a], lab[b], lab[x]], "4-4 edge shares a 3-face with a 4^- vertex")
        for i, (a, b) in enumerate(pairs):
            for a2, b2 in pairs[i + 1:]:
                if {a, b} & {a2, b2}:
                    continue
                if (f3[a] | f3[b]) & (f3[a2] | f3[b2]):
                    bad("L3.3", [lab[a], lab[b], lab[a2], lab[b2]], "two 4-4 edges share a 3-face")
    return out


__all__ = [
    "StrippedGraph", "build_H", "alpha", "Transfer", "ChargeLedger", "initial_charges",
    "total_charge", "apply_rules", "audit_transfers", "final_report", "FinalCharge",
    "discharge", "discharge_report", "check_structural_lemmas", "LemmaViolation", "TAG_ORDER",
]
