"""Command line: ``aecc color|verify|oracle|find-config|discharge|gen``.

Exit codes: 0 success, 1 violation / no colouring / budget exhausted,
2 unreadable input or partial colouring, 3 graph not planar,
4 exhaustive search failed on a planar graph (a reproducer is written).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional

from . import schemas
from .coloring import ColoringError, check_acyclic, format_coloring, parse_coloring
from .colorer import ColorerBudget, ColoringFailed, TheoremContradiction, color_planar
from .configs import find_any_configuration
from .corpus import default_corpus, named, stacked_triangulation, thin, write_corpus
from .discharge import DischargeError, discharge_report
from .embedding import NotPlanar
from .graph import GraphError, format_edge_list, max_degree, parse_edge_list
from .oracle import BudgetExceeded, OracleBudget, acyclic_chromatic_index, exists_acyclic_coloring

OK, FAIL, BAD_INPUT, NOT_PLANAR, CONTRADICTION = 0, 1, 2, 3, 4

log = logging.getLogger("aecc")


def _dump(doc, schema, path: Optional[str]) -> None:
    schemas.validate(doc, schema)
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _read_graph(path: str):
    return parse_edge_list(Path(path).read_text())


def _oracle_budget(args) -> OracleBudget:
    return OracleBudget(args.budget_nodes, args.budget_seconds)


# -- color -------------------------------------------------------------------

def _color_one(path: str, out_dir: str, palette_size, budget_nodes, budget_seconds) -> int:
    stem = Path(path).stem
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    try:
        g = _read_graph(path)
    except (OSError, GraphError) as exc:
        log.error("%s: %s", path, exc)
        return BAD_INPUT
    budget = ColorerBudget(fallback=OracleBudget(budget_nodes, budget_seconds))
    try:
        res = color_planar(g, budget, palette_size)
    except NotPlanar as exc:
        log.error("%s: %s", path, exc)
        return NOT_PLANAR
    except TheoremContradiction as exc:
        (out / f"{stem}.repro.edges").write_text(format_edge_list(exc.graph))
        if exc.coloring is not None:
            (out / f"{stem}.repro.coloring").write_text(format_coloring(exc.graph, exc.coloring))
        log.error("%s: %s; reproducer written to %s", path, exc, out)
        return CONTRADICTION
    except (ColoringFailed, BudgetExceeded) as exc:
        log.error("%s: %s", path, exc)
        return FAIL
    c = res.coloring
    ok = check_acyclic(g, c) is None and (g.edge_count == 0 or len(c.colors_used()) <= max_degree(g) + 5)
    (out / f"{stem}.coloring").write_text(format_coloring(g, c))
    trace = {"input": Path(path).name, "palette_size": res.palette_size, "colors_used": len(c.colors_used()),
             "ok": ok, "blocks": res.blocks, "steps": res.trace_json()}
    _dump(trace, schemas.TRACE, str(out / f"{stem}.trace.json"))
    return OK if ok else FAIL


def cmd_color(args) -> int:
    jobs = [(p, args.out_dir, args.palette_size, args.budget_nodes, args.budget_seconds) for p in args.inputs]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            codes = list(pool.map(_color_one, *zip(*jobs)))
    else:
        codes = [_color_one(*j) for j in jobs]
    for p, code in zip(args.inputs, codes):
        print(f"{p}\t{code}")
    return max(codes)


# -- verify ------------------------------------------------------------------

def cmd_verify(args) -> int:
    try:
        g = _read_graph(args.graph)
        c = parse_coloring(Path(args.coloring).read_text(), args.palette_size)
        bad = check_acyclic(g, c)
    except (OSError, GraphError, ColoringError) as exc:
        _dump({"ok": False, "error": str(exc)}, schemas.VIOLATION, args.json)
        return BAD_INPUT
    _dump({"ok": bad is None, "violation": bad.to_json() if bad else None}, schemas.VIOLATION, args.json)
    return OK if bad is None else FAIL


# -- oracle ------------------------------------------------------------------

def cmd_oracle(args) -> int:
    try:
        g = _read_graph(args.graph)
    except (OSError, GraphError) as exc:
        log.error("%s", exc)
        return BAD_INPUT
    try:
        if args.k is None:
            doc = {"result": "Index", "index": acyclic_chromatic_index(g, _oracle_budget(args))}
            line = str(doc["index"])
        else:
            found = exists_acyclic_coloring(g, args.k, _oracle_budget(args))
            doc = {"result": "Some" if found else "No", "k": args.k}
            line = doc["result"]
            if found and args.out:
                Path(args.out).write_text(format_coloring(g, found))
    except BudgetExceeded as exc:
        doc, line = {"result": "BudgetExceeded", "nodes": exc.nodes}, "BudgetExceeded"
    except GraphError as exc:
        log.error("%s", exc)
        return BAD_INPUT
    print(line)
    if args.json:
        _dump(doc, schemas.ORACLE, args.json)
    return FAIL if doc["result"] == "BudgetExceeded" else OK


# -- find-config / discharge ---------------------------------------------------

def cmd_find_config(args) -> int:
    try:
        g = _read_graph(args.graph)
    except (OSError, GraphError) as exc:
        log.error("%s", exc)
        return BAD_INPUT
    cfg = find_any_configuration(g, args.strict)
    if cfg is None and not args.json:
        print("none")
        return OK
    _dump(cfg.to_json() if cfg else None, schemas.CONFIGURATION, args.json)
    return OK


def cmd_discharge(args) -> int:
    try:
        g = _read_graph(args.graph)
        report = discharge_report(g, args.component, args.lenient)
    except NotPlanar as exc:
        log.error("%s", exc)
        return NOT_PLANAR
    except (OSError, GraphError, DischargeError) as exc:
        log.error("%s", exc)
        return BAD_INPUT
    _dump(report, schemas.DISCHARGE, args.json)
    return OK


# -- gen ---------------------------------------------------------------------

def cmd_gen(args) -> int:
    try:
        if args.kind == "corpus":
            path = write_corpus(default_corpus(args.seed), args.out_dir)
            schemas.validate(json.loads(path.read_text()), schemas.MANIFEST)
            print(path)
            return OK
        if args.kind == "stacked":
            g = stacked_triangulation(args.n, args.seed)[0]
        elif args.kind == "named":
            g = named(args.name)
        else:
            g = thin(_read_graph(args.input), args.p, args.seed)
    except (OSError, GraphError) as exc:
        log.error("%s", exc)
        return BAD_INPUT
    text = format_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="aecc", description="Acyclic edge colouring of planar graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def budget(sp):
        sp.add_argument("--budget-nodes", type=int, default=None, help="search node cap")
        sp.add_argument("--budget-seconds", type=float, default=None, help="wall-clock cap")

    sp = sub.add_parser("color", help="colour edge-list files with Delta+5 colours")
    sp.add_argument("inputs", nargs="+")
    sp.add_argument("--out-dir", default=".")
    sp.add_argument("--palette-size", type=int, default=None, help="override Delta+5")
    sp.add_argument("--jobs", type=int, default=1, help="files coloured in parallel")
    budget(sp)
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("verify", help="check a colouring for acyclicity")
    sp.add_argument("graph")
    sp.add_argument("coloring")
    sp.add_argument("--palette-size", type=int, default=None)
    sp.add_argument("--json", default=None, help="write the report here instead of stdout")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="exact acyclic chromatic index, or a decision for --k")
    sp.add_argument("graph")
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--out", default=None, help="write the witness colouring here")
    sp.add_argument("--json", default=None)
    budget(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("find-config", help="first reducible configuration, or 'none'")
    sp.add_argument("graph")
    sp.add_argument("--strict", action="store_true", help="alternative reading of A3.2")
    sp.add_argument("--json", default=None)
    sp.set_defaults(func=cmd_find_config)

    sp = sub.add_parser("discharge", help="discharging report on the stripped graph")
    sp.add_argument("graph")
    sp.add_argument("--component", type=int, default=None)
    sp.add_argument("--lenient", action="store_true", help="record R4 near-misses")
    sp.add_argument("--json", default=None)
    sp.set_defaults(func=cmd_discharge)

    sp = sub.add_parser("gen", help="generate graphs")
    sp.add_argument("kind", choices=["stacked", "named", "thin", "corpus"])
    sp.add_argument("--n", type=int, default=10)
    sp.add_argument("--name", default="K4")
    sp.add_argument("--input", default=None, help="graph to thin")
    sp.add_argument("--p", type=float, default=0.5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None)
    sp.add_argument("--out-dir", default="corpus")
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get("AECC_LOG", "WARNING").upper(),
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
