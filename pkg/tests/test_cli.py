import filecmp

import pytest

from portcgd import io
from portcgd.canon import isomorphic
from portcgd.cli import main

DATA = "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    report = {}
    for line in out.splitlines():
        k, _, v = line.partition(": ")
        report.setdefault(k, v)
    return code, report, out


def test_validate_sphere(capsys):
    code, rep, _ = run(capsys, "validate", f"{DATA}/graphs/sphere2.graph", "--check", "torsion")
    assert code == 0 and rep["valid"] == "yes" and rep["torsion-free"] == "yes"
    assert list(rep)[0] == "command" and list(rep)[-2:] == ["exit", "time"]


def test_validate_dangling(capsys):
    code, rep, out = run(capsys, "validate", f"{DATA}/graphs/dangling.graph")
    assert code == 1 and rep["valid"] == "no"
    assert "closure" in rep["violation"] and "(line 7)" in rep["violation"]


def test_validate_twisted_cycle(capsys):
    code, rep, _ = run(capsys, "validate", f"{DATA}/graphs/fig4_twisted.graph", "--check", "torsion")
    assert code == 1 and rep["torsion"] == "t0:{1} ~ t0:{2}"
    assert rep["witness"].startswith("hinge t0:{1} -> t0:{2} via")


def test_validate_bounded_star_and_manifold(capsys):
    code, rep, _ = run(capsys, "validate", f"{DATA}/graphs/fig4_normal.graph",
                       "--check", "bounded-star", "--bound-s", "2", "--check", "manifold")
    assert code == 1
    assert rep["bounded-star(s=2)"] == "no" and rep["witness"].startswith("hinge")
    assert rep["discrete-manifold"] == "no"


def test_parse_error_exit(tmp_path, capsys):
    bad = tmp_path / "bad.graph"
    bad.write_text("dim 2\nvertex u ports 0 1 2\nedge u:0 nowhere:1 perm 1,0,2,3\n")
    code, rep, _ = run(capsys, "validate", str(bad))
    assert code == 2 and rep["error"].startswith("line 3")


def test_evolve_identity(tmp_path, capsys):
    out = tmp_path / "out.graph"
    code, rep, _ = run(capsys, "evolve", f"{DATA}/graphs/sphere2.graph", f"{DATA}/rules/identity2.rule",
                       "--steps", "5", "--out", str(out))
    assert code == 0
    g = io.read_graph(f"{DATA}/graphs/sphere2.graph").graph
    assert isomorphic(io.read_graph(out).graph, g) is not None


def test_evolve_subdivision(tmp_path, capsys):
    out = tmp_path / "out.graph"
    code, rep, _ = run(capsys, "evolve", f"{DATA}/graphs/delta2.graph", f"{DATA}/rules/subdivide2.rule",
                       "--steps", "2", "--out", str(out))
    assert code == 0 and rep["vertices-in"] == "1" and rep["vertices-out"] == "9"


def test_evolve_conflict(tmp_path, capsys):
    code, rep, _ = run(capsys, "evolve", f"{DATA}/graphs/segment2.graph", f"{DATA}/rules/conflicting.rule",
                       "--out", str(tmp_path / "x.graph"))
    assert code == 1 and rep["error"].startswith("step 1:")


def test_certify_identity(capsys):
    code, rep, _ = run(capsys, "certify", f"{DATA}/rules/identity2.rule")
    assert code == 0
    assert rep["cdc"] == "yes" and rep["cddm"] == "yes"
    for k in ("strongly-rotation-commuting", "bounded-star-preserving(s=2)",
              "torsion-free-preserving(s=2)", "discrete-manifold-preserving(s=2)"):
        assert rep[k] == "pass"


def test_certify_port_sensitive(capsys):
    code, rep, _ = run(capsys, "certify", f"{DATA}/rules/port_sensitive.rule",
                       "--property", "bounded-star")
    assert code == 1
    assert rep["strongly-rotation-commuting"] == "fail"
    assert "witness-disk" in " ".join(rep)
    assert "--strongify" in rep["suggestion"]


def test_certify_budget_zero(capsys):
    code, rep, _ = run(capsys, "certify", f"{DATA}/rules/identity2.rule", "--budget", "0")
    assert code == 3
    assert rep["bounded-star-preserving(s=2)"] == "unknown"


def test_certify_odd_bound(capsys):
    code, rep, _ = run(capsys, "certify", f"{DATA}/rules/identity2.rule", "--bound-s", "3")
    assert code == 2


def test_certify_collapse(capsys):
    code, rep, _ = run(capsys, "certify", f"{DATA}/rules/collapse.rule", "--property", "bounded-star")
    assert code == 1
    assert rep["bounded-star-preserving(s=2)"] == "fail"
    assert rep["bounded-star-preserving(s=2).witness"].startswith("hinge")


def test_move_and_replay(tmp_path, capsys):
    out, log, again = tmp_path / "a.graph", tmp_path / "moves.log", tmp_path / "b.graph"
    code, rep, _ = run(capsys, "move", f"{DATA}/graphs/delta2.graph", "unshell u=u ports=0,1",
                       "--out", str(out), "--log", str(log))
    assert code == 0 and rep["vertices"] == "2"
    code, rep, _ = run(capsys, "move", str(out), "bistellar seed=u sphere-map=u:3",
                       "--out", str(out), "--log", str(log))
    assert code == 0 and rep["vertices"] == "4"
    code, rep, _ = run(capsys, "replay", f"{DATA}/graphs/delta2.graph", str(log), "--out", str(again))
    assert code == 0 and rep["moves"] == "2"
    assert filecmp.cmp(out, again, shallow=False)


def test_illegal_move(tmp_path, capsys):
    code, rep, _ = run(capsys, "move", f"{DATA}/graphs/sphere2.graph", "shell v=v0",
                       "--out", str(tmp_path / "x.graph"))
    assert code == 1 and rep["error"].startswith("illegal move")


def test_export_dot(tmp_path, capsys):
    out = tmp_path / "s.dot"
    code, rep, _ = run(capsys, "export-dot", f"{DATA}/graphs/sphere2.graph", "--out", str(out))
    assert code == 0 and rep["nodes"] == "4" and rep["edges"] == "6"
    assert "1↔0 s01" in out.read_text()


def test_enum_disks(tmp_path, capsys):
    code, rep, _ = run(capsys, "enum-disks", "--dim", "1", "--radius", "0", "--out", str(tmp_path / "d.txt"))
    assert code == 0 and rep["disks"] == "87" and rep["complete"] == "yes"
    code, rep, _ = run(capsys, "enum-disks", "--dim", "2", "--radius", "0", "--cap", "1")
    assert code == 3 and rep["disks"] == "1" and rep["complete"] == "no"
