import json
import subprocess
import sys

import pytest

from aecc.cli import main
from aecc.coloring import check_acyclic, parse_coloring
from aecc.corpus import named
from aecc.graph import format_edge_list, parse_edge_list
from aecc.schemas import CONFIGURATION, DISCHARGE, TRACE, VIOLATION, validate


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


K5 = "".join(f"{u} {v}\n" for u in range(5) for v in range(u + 1, 5))


def test_color_exit_codes(files, tmp_path, capsys):
    k4 = files("k4.edges", format_edge_list(named("K4")))
    k5 = files("k5.edges", K5)
    bad = files("bad.edges", "0 x\n")
    out = tmp_path / "out"
    assert main(["color", k4, "--out-dir", str(out)]) == 0
    assert main(["color", k5, "--out-dir", str(out)]) == 3
    assert main(["color", bad, "--out-dir", str(out)]) == 2
    assert main(["color", k4, k5, "--out-dir", str(out)]) == 3
    assert f"{k4}\t0" in capsys.readouterr().out
    g = named("K4")
    c = parse_coloring((out / "k4.coloring").read_text())
    assert check_acyclic(g, c) is None
    validate(json.loads((out / "k4.trace.json").read_text()), TRACE)


def test_color_palette_too_small_fails(files, tmp_path):
    k4 = files("k4.edges", format_edge_list(named("K4")))
    assert main(["color", k4, "--out-dir", str(tmp_path), "--palette-size", "4"]) == 1


def test_verify(files, capsys):
    c4 = files("c4.edges", format_edge_list(named("C4")))
    edges = named("C4").edges

    def col(cs):
        return "".join(f"{u} {v} {x}\n" for (u, v), x in zip(edges, cs))
    assert main(["verify", c4, files("a.col", col([1, 2, 2, 1]))]) == 1
    doc = json.loads(capsys.readouterr().out)
    validate(doc, VIOLATION)
    assert doc["ok"] is False and doc["violation"]["kind"] == "bichromatic"
    assert main(["verify", c4, files("b.col", col([1, 2, 3, 1]))]) == 0
    assert json.loads(capsys.readouterr().out)["ok"] is True
    assert main(["verify", c4, files("c.col", col([1, 2, 3, 0]))]) == 2


def test_oracle(files, capsys, tmp_path):
    k4 = files("k4.edges", format_edge_list(named("K4")))
    assert main(["oracle", k4]) == 0
    assert capsys.readouterr().out.strip() == "5"
    assert main(["oracle", k4, "--k", "4"]) == 0
    assert capsys.readouterr().out.strip() == "No"
    out = tmp_path / "w.col"
    assert main(["oracle", k4, "--k", "5", "--out", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "Some"
    assert check_acyclic(named("K4"), parse_coloring(out.read_text())) is None
    ico = files("ico.edges", format_edge_list(named("icosahedron")))
    assert main(["oracle", ico, "--budget-nodes", "10"]) == 1
    assert capsys.readouterr().out.strip() == "BudgetExceeded"


def test_find_config(files, capsys):
    assert main(["find-config", files("c5.edges", format_edge_list(named("C5")))]) == 0
    doc = json.loads(capsys.readouterr().out)
    validate(doc, CONFIGURATION)
    assert doc["tag"] == "A1.1"
    k66 = "".join(f"{u} {v}\n" for u in range(6) for v in range(6, 12))
    assert main(["find-config", files("k66.edges", k66)]) == 0
    assert capsys.readouterr().out.strip() == "none"


def test_discharge(files, capsys):
    assert main(["discharge", files("w8.edges", format_edge_list(named("W8")))]) == 0
    doc = json.loads(capsys.readouterr().out)
    validate(doc, DISCHARGE)
    assert doc["total"] == "8/1"
    assert main(["discharge", files("k5.edges", K5)]) == 3
    assert main(["discharge", files("c5.edges", format_edge_list(named("C5")))]) == 2


def test_gen(tmp_path, capsys):
    assert main(["gen", "stacked", "--n", "8", "--seed", "2"]) == 0
    g = parse_edge_list(capsys.readouterr().out)
    assert g.edge_count == 18
    assert main(["gen", "named", "--name", "nope"]) == 2
    src = tmp_path / "k4.edges"
    src.write_text(format_edge_list(named("K4")))
    assert main(["gen", "thin", "--input", str(src), "--p", "1"]) == 0
    assert parse_edge_list(capsys.readouterr().out).vertex_count == 10


def test_color_bytes_stable(tmp_path):
    src = tmp_path / "g.edges"
    src.write_text(format_edge_list(named("icosahedron")))
    outs = []
    for i in range(2):
        d = tmp_path / f"o{i}"
        assert main(["color", str(src), "--out-dir", str(d)]) == 0
        outs.append(((d / "g.coloring").read_bytes(), (d / "g.trace.json").read_bytes()))
    assert outs[0] == outs[1]


def test_console_entry_point(tmp_path):
    src = tmp_path / "k4.edges"
    src.write_text(format_edge_list(named("K4")))
    r = subprocess.run([sys.executable, "-m", "aecc", "oracle", str(src)], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "5"
