"""Command-line front end.

Every command prints a ``key: value`` report.  Exit codes: 0 success,
1 a check failed, 2 bad input, 3 a verdict stayed unknown.
"""
from __future__ import annotations

import argparse
import sys
import time

from . import io
from .dynamics import (PROPERTIES, RuleError, certify_cddm, enum_disks, evolve, strongify)
from .geometry import bounded_star_check, torsion_scan
from .graph import GraphError, InconsistentGraphs
from .pachner import MoveError, apply_move, is_discrete_manifold

OK, FAILED, BAD_INPUT, UNKNOWN = 0, 1, 2, 3


class Reporter:
    def __init__(self, command: str, out=None):
        self.items = [("command", command)]
        self.out = out or sys.stdout
        self.t0 = time.perf_counter()

    def add(self, key, value):
        self.items.append((key, value))

    def emit(self, code: int) -> int:
        self.items.append(("exit", code))
        self.items.append(("time", f"{time.perf_counter() - self.t0:.3f}s"))
        self.out.write(io.format_report(self.items))
        return code


def _load_graph(path, rep: Reporter) -> io.ParsedGraph:
    return io.read_graph(path)


def cmd_validate(args, rep: Reporter) -> int:
    pg = _load_graph(args.path, rep)
    g = pg.graph
    bad = pg.violations()
    rep.add("vertices", len(g))
    rep.add("edges", len(g.undirected_edges()))
    rep.add("valid", "no" if bad else "yes")
    for v in bad:
        rep.add("violation", str(v))
    if bad:
        return rep.emit(FAILED)
    code = OK
    checks = args.check or []
    if "torsion" in checks:
        found = torsion_scan(g, limit=1)
        rep.add("torsion-free", "no" if found else "yes")
        if found:
            t = found[0]
            rep.add("torsion", f"{t.face} ~ {t.other}")
            rep.add("witness", io.format_hinge(t.hinge))
            code = FAILED
    if "bounded-star" in checks:
        res = bounded_star_check(g, args.bound_s)
        rep.add(f"bounded-star(s={args.bound_s})", "yes" if res.bounded else "no")
        if not res.bounded:
            rep.add("witness", io.format_hinge(res.witness))
            code = FAILED
    if "manifold" in checks:
        mv = is_discrete_manifold(g, args.budget)
        rep.add("discrete-manifold", mv.verdict)
        for v, verdict, reason in mv.per_vertex:
            if verdict != "yes":
                rep.add("star", f"{v} {verdict}: {reason}")
        if mv.verdict == "no":
            code = FAILED
        elif mv.verdict == "unknown" and code == OK:
            code = UNKNOWN
    return rep.emit(code)


def cmd_evolve(args, rep: Reporter) -> int:
    g = _load_graph(args.graph, rep).graph
    f = io.read_rule(args.rule)
    rep.add("steps", args.steps)
    rep.add("vertices-in", len(g))
    try:
        out = evolve(f, g, args.steps)
    except (RuleError, InconsistentGraphs) as exc:
        rep.add("error", str(exc))
        return rep.emit(FAILED)
    rep.add("vertices-out", len(out))
    io.write_graph(out, args.out)
    rep.add("output", args.out)
    return rep.emit(OK)


def _witness_items(cert) -> list:
    w = cert.witness
    out = []
    if w is None:
        return out
    if cert.property == "strongly-rotation-commuting":
        g, c = w[0], w[1]
        out.append(("witness-disk", " | ".join(io.graph_lines(g))))
        out.append(("witness-center", c))
        out.append(("witness-rotation", f"{w[-2]} {','.join(map(str, w[-1]))}"))
        return out
    d = w[0]
    out.append(("witness-disk", " | ".join(io.graph_lines(d.graph))))
    out.append(("witness-center", d.center))
    if len(w) >= 4 and hasattr(w[2], "steps"):
        out.append(("witness", io.format_hinge(w[2])))
    elif len(w) >= 4 and hasattr(w[2], "hinge"):
        out.append(("witness-torsion", f"{w[2].face} ~ {w[2].other}"))
        out.append(("witness", io.format_hinge(w[2].hinge)))
    return out


def cmd_certify(args, rep: Reporter) -> int:
    f = io.read_rule(args.rule)
    if args.bound_s % 2:
        rep.add("error", "--bound-s must be even (s = 2 r')")
        return rep.emit(BAD_INPUT)
    if args.strongify:
        try:
            f = strongify(f)
        except RuleError as exc:
            rep.add("strongify", f"failed: {exc}")
            return rep.emit(FAILED)
        rep.add("strongify", f"{len(f)} entries")
        if args.out:
            io.write_rule(f, args.out)
            rep.add("output", args.out)
    props = args.property or list(PROPERTIES)
    bundle = certify_cddm(f, args.bound_s // 2, args.budget, args.cap, props)
    verdicts = []
    for cert in bundle.certificates:
        rep.add(cert.property, cert.verdict)
        if cert.condition:
            rep.add(f"{cert.property}.reason", cert.condition)
        rep.add(f"{cert.property}.scope", cert.scope)
        for k, v in _witness_items(cert):
            rep.add(f"{cert.property}.{k}", v)
        verdicts.append(cert.verdict)
    src = bundle.certificates[0]
    if src.verdict == "fail" and not args.strongify:
        rep.add("suggestion", "rerun with --strongify to build a strongly rotation-commuting table")
    rep.add("cdc", "yes" if bundle.cdc else "no")
    rep.add("cddm", "yes" if bundle.cddm else "no")
    if "fail" in verdicts:
        return rep.emit(FAILED)
    if "unknown" in verdicts:
        return rep.emit(UNKNOWN)
    return rep.emit(OK)


def cmd_move(args, rep: Reporter) -> int:
    g = _load_graph(args.graph, rep).graph
    rec = io.parse_move(args.spec)
    try:
        out, inv = apply_move(g, rec)
    except (MoveError, GraphError) as exc:
        rep.add("error", f"illegal move: {exc}")
        return rep.emit(FAILED)
    io.write_graph(out, args.out)
    rep.add("move", io.format_move(rec))
    rep.add("inverse", "; ".join(io.format_move(r) for r in inv))
    rep.add("vertices", len(out))
    rep.add("output", args.out)
    if args.log:
        with open(args.log, "a", encoding="utf-8") as fh:
            fh.write(io.format_move(rec) + "\n")
        rep.add("log", args.log)
    return rep.emit(OK)


def cmd_replay(args, rep: Reporter) -> int:
    g = _load_graph(args.graph, rep).graph
    with open(args.log, encoding="utf-8") as fh:
        records = io.parse_moves(fh.read())
    for line, rec in records:
        try:
            g, _ = apply_move(g, rec)
        except (MoveError, GraphError) as exc:
            rep.add("error", f"line {line}: illegal move: {exc}")
            return rep.emit(FAILED)
    rep.add("moves", len(records))
    rep.add("vertices", len(g))
    io.write_graph(g, args.out)
    rep.add("output", args.out)
    return rep.emit(OK)


def cmd_export_dot(args, rep: Reporter) -> int:
    g = _load_graph(args.graph, rep).graph
    text = io.to_dot(g)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    rep.add("nodes", len(g))
    rep.add("edges", len(g.undirected_edges()))
    rep.add("output", args.out)
    return rep.emit(OK)


def cmd_enum_disks(args, rep: Reporter) -> int:
    res = enum_disks(args.dim, args.radius, bound_s=args.bound_s, torsion_free=args.torsion_free,
                     manifold=args.manifold, cap=args.cap, rotations=args.rotations, budget=args.budget)
    rep.add("disks", len(res.disks))
    rep.add("complete", "yes" if res.complete else "no")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for k, d in enumerate(res.disks):
                fh.write(f"# disk {k} center {d.center}\n")
                fh.write(io.serialize_graph(d.graph))
        rep.add("output", args.out)
    return rep.emit(OK if res.complete else UNKNOWN)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="portcgd", description="Port graphs of pseudo-manifolds and their local dynamics.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("validate", help="check a graph file")
    p.add_argument("path")
    p.add_argument("--check", action="append", choices=["torsion", "bounded-star", "manifold"])
    p.add_argument("--bound-s", type=int, default=2)
    p.add_argument("--budget", type=int, default=200)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("evolve", help="iterate a rule on a graph")
    p.add_argument("graph")
    p.add_argument("rule")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_evolve)

    p = sub.add_parser("certify", help="check rule properties")
    p.add_argument("rule")
    p.add_argument("--property", action="append", choices=list(PROPERTIES))
    p.add_argument("--bound-s", type=int, default=2)
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--cap", type=int, default=100000)
    p.add_argument("--strongify", action="store_true")
    p.add_argument("--out", help="where to write the strongified rule")
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("move", help="apply one Pachner move")
    p.add_argument("graph")
    p.add_argument("spec", help="e.g. 'unshell u=u ports=0,1'")
    p.add_argument("--out", required=True)
    p.add_argument("--log", help="append the move record to this file")
    p.set_defaults(fn=cmd_move)

    p = sub.add_parser("replay", help="replay a move log")
    p.add_argument("graph")
    p.add_argument("log")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_replay)

    p = sub.add_parser("export-dot", help="write Graphviz DOT")
    p.add_argument("graph")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_export_dot)

    p = sub.add_parser("enum-disks", help="enumerate pointed disks")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--bound-s", type=int)
    p.add_argument("--torsion-free", action="store_true")
    p.add_argument("--manifold", action="store_true")
    p.add_argument("--rotations", action="store_true", help="quotient by vertex rotations")
    p.add_argument("--cap", type=int, default=10000)
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_enum_disks)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    rep = Reporter(" ".join(["portcgd"] + list(sys.argv[1:] if argv is None else argv)))
    try:
        return args.fn(args, rep)
    except (io.ParseError, OSError, ValueError) as exc:
        rep.add("error", str(exc))
        return rep.emit(BAD_INPUT)


if __name__ == "__main__":
    sys.exit(main())
