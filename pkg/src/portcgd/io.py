"""Text formats: graphs, rules, move logs, reports, DOT.

Graph files are line based::

    # comment
    dim 2
    vertex u ports 0 1 2
    vertex v ports 0 1 3 label x
    edge u:0 v:1 perm 1,0,2,3

An ``edge`` line adds both half-edges; ``arc`` adds only the given one.
Gluings are written as the images of ``0..n+1`` (the ``perm`` keyword may
be omitted when reading).  Serialization lists
vertices in name order and every edge once, smaller endpoint first, so
``parse`` and ``serialize`` round-trip byte for byte.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from . import perm as P
from .geometry import HingePath
from .graph import Graph, GraphError, validate
from .names import name_key, parse_name
from .pachner import MoveRecord
from .rotation import RotationSequence, VertexRotation


class ParseError(GraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class ParsedGraph:
    graph: Graph
    vertex_lines: dict = field(default_factory=dict)
    edge_lines: dict = field(default_factory=dict)  # (u, p) -> line that declared it

    def violations(self) -> list:
        out = []
        for v in validate(self.graph):
            line = self.edge_lines.get((v.vertex, v.port)) or self.vertex_lines.get(v.vertex)
            out.append((line, v))
        out.sort(key=lambda x: (x[0] or 0, str(x[1])))
        return [replace(v, line=line) for line, v in out]


def _split_port(tok: str, line: int):
    if ":" not in tok:
        raise ParseError(line, f"expected vertex:port, got {tok!r}")
    name, port = tok.rsplit(":", 1)
    try:
        return parse_name(name), int(port)
    except ValueError as exc:
        raise ParseError(line, str(exc)) from None


def _perm(tok: str, line: int):
    try:
        return P.parse_perm(tok)
    except ValueError as exc:
        raise ParseError(line, f"bad gluing {tok!r}: {exc}") from None


def _strip(text: str) -> str:
    return text.split("#", 1)[0].strip()


def parse_graph_lines(lines, first_line: int = 1, dim: Optional[int] = None) -> ParsedGraph:
    ports, labels, arcs = {}, {}, []
    vlines = {}
    for k, raw in enumerate(lines, first_line):
        text = _strip(raw)
        if not text:
            continue
        toks = text.split()
        kw = toks[0]
        if kw == "dim":
            if len(toks) != 2 or not toks[1].isdigit():
                raise ParseError(k, "expected 'dim <n>'")
            if dim is not None and int(toks[1]) != dim:
                raise ParseError(k, f"dimension {toks[1]} differs from {dim}")
            dim = int(toks[1])
        elif kw == "vertex":
            if len(toks) < 3 or toks[2] != "ports":
                raise ParseError(k, "expected 'vertex <name> ports <p>...'")
            try:
                v = parse_name(toks[1])
            except ValueError as exc:
                raise ParseError(k, str(exc)) from None
            if v in ports:
                raise ParseError(k, f"vertex {v} declared twice")
            rest = toks[3:]
            lab = None
            if "label" in rest:
                i = rest.index("label")
                if i != len(rest) - 2:
                    raise ParseError(k, "expected one label after 'label'")
                lab = rest[i + 1]
                rest = rest[:i]
            try:
                ps = [int(x) for x in rest]
            except ValueError:
                raise ParseError(k, "ports must be integers") from None
            if len(set(ps)) != len(ps):
                raise ParseError(k, "repeated port")
            ports[v] = frozenset(ps)
            if lab is not None:
                labels[v] = lab
            vlines[v] = k
        elif kw in ("edge", "arc"):
            if len(toks) == 5 and toks[3] == "perm":
                toks = toks[:3] + toks[4:]
            if len(toks) != 4:
                raise ParseError(k, f"expected '{kw} u:p v:q perm <gluing>'")
            u, p = _split_port(toks[1], k)
            v, q = _split_port(toks[2], k)
            arcs.append((k, kw, u, p, v, q, _perm(toks[3], k)))
        else:
            raise ParseError(k, f"unknown keyword {kw!r}")
    if dim is None:
        raise ParseError(first_line, "missing 'dim' line")
    edges, elines = {}, {}
    for k, kw, u, p, v, q, gl in arcs:
        for name in (u, v):
            if name not in ports:
                raise ParseError(k, f"undeclared vertex {name}")
        if (u, p) in edges:
            raise ParseError(k, f"port {u}:{p} glued twice")
        edges[(u, p)] = (v, q, gl)
        elines[(u, p)] = k
        if kw == "edge":
            # an occupied reverse port is left alone; validate reports the closure
            if (v, q) not in edges:
                edges[(v, q)] = (u, p, P.inverse(gl))
                elines[(v, q)] = k
    g = Graph(dim, ports, edges, labels)
    return ParsedGraph(g, vlines, elines)


def parse_graph(text: str) -> Graph:
    return parse_graph_lines(text.splitlines()).graph


def read_graph(path) -> ParsedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_lines(fh.read().splitlines())


def graph_lines(g: Graph, header: bool = True) -> list:
    out = [f"dim {g.dim}"] if header else []
    for v in g.sorted_vertices():
        line = f"vertex {v} ports " + " ".join(map(str, sorted(g.ports[v])))
        if v in g.labels and g.labels[v] is not None:
            line += f" label {g.labels[v]}"
        out.append(line)
    for u, p, gl, v, q in g.undirected_edges():
        out.append(f"edge {u}:{p} {v}:{q} perm {P.format_perm(gl)}")
    return out


def serialize_graph(g: Graph) -> str:
    return "\n".join(graph_lines(g)) + "\n"


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(g))


# -- rules -----------------------------------------------------------------------------

def parse_rule(text: str):
    """Rule file::

        rule radius 1 dim 2 bound 1 default identity
        entry center c
        disk
          <graph lines>
        output
          <graph lines with derived names>
        end
    """
    from .dynamics import LocalRule, RuleError

    lines = text.splitlines()
    rule = None
    i = 0
    while i < len(lines):
        text_i = _strip(lines[i])
        k = i + 1
        if not text_i:
            i += 1
            continue
        toks = text_i.split()
        if toks[0] == "rule":
            opts = dict(zip(toks[1::2], toks[2::2]))
            if len(toks) % 2 != 1 or not {"radius", "dim"} <= set(opts):
                raise ParseError(k, "expected 'rule radius <r> dim <n> [bound <b>] [default <d>]'")
            try:
                rule = LocalRule(int(opts["radius"]), int(opts["dim"]), int(opts.get("bound", 1)),
                                 opts.get("default"))
            except (ValueError, RuleError) as exc:
                raise ParseError(k, str(exc)) from None
            i += 1
        elif toks[0] == "entry":
            if rule is None:
                raise ParseError(k, "entry before the 'rule' line")
            if len(toks) != 3 or toks[1] != "center":
                raise ParseError(k, "expected 'entry center <name>'")
            center = parse_name(toks[2])
            sections = {}
            cur, start = None, None
            j = i + 1
            while j < len(lines) and _strip(lines[j]) != "end":
                t = _strip(lines[j])
                if t in ("disk", "output"):
                    cur, start = t, j + 2
                    sections[cur] = (start, [])
                elif cur is not None:
                    sections[cur][1].append(lines[j])
                elif t:
                    raise ParseError(j + 1, "expected 'disk' or 'output'")
                j += 1
            if j == len(lines):
                raise ParseError(k, "entry without 'end'")
            if set(sections) != {"disk", "output"}:
                raise ParseError(k, "entry needs a disk and an output section")
            d = parse_graph_lines(sections["disk"][1], sections["disk"][0], rule.dim)
            o = parse_graph_lines(sections["output"][1], sections["output"][0], rule.dim)
            for pg, sec in ((d, "disk"), (o, "output")):
                bad = pg.violations()
                if bad:
                    raise ParseError(bad[0].line or k, f"{sec}: {bad[0]}")
            try:
                rule.add(d.graph, center, o.graph)
            except (RuleError, GraphError) as exc:
                raise ParseError(k, str(exc)) from None
            i = j + 1
        else:
            raise ParseError(k, f"unknown keyword {toks[0]!r}")
    if rule is None:
        raise ParseError(1, "missing 'rule' line")
    return rule


def read_rule(path):
    with open(path, encoding="utf-8") as fh:
        return parse_rule(fh.read())


def serialize_rule(f) -> str:
    head = f"rule radius {f.radius} dim {f.dim} bound {f.bound}"
    if f.default is not None:
        head += f" default {f.default}"
    out = [head]
    for key in sorted(f.entries, key=repr):
        e = f.entries[key]
        out.append("entry center 0")
        out.append("disk")
        out += ["  " + x for x in graph_lines(e.disk, header=False)]
        out.append("output")
        out += ["  " + x for x in graph_lines(e.output, header=False)]
        out.append("end")
    return "\n".join(out) + "\n"


def write_rule(f, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_rule(f))


# -- move logs ------------------------------------------------------------------------------

def _split_top(text: str, sep: str = ",") -> list:
    out, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        elif ch == sep and depth == 0:
            out.append(text[start:i])
            start = i + 1
    out.append(text[start:])
    return out


def format_move(rec: MoveRecord) -> str:
    if rec.kind == "rot":
        v, r = rec.params
        return f"rot {v} perm {P.format_perm(r)}"
    if rec.kind == "bistellar":
        seed, index, names = rec.params
        out = f"bistellar seed={seed} sphere-map=" + ",".join(f"{h}:{i}" for h, i in index)
        if names is not None:
            out += " names=" + ",".join(map(str, names))
        return out
    if rec.kind == "unshell":
        u, S, name = rec.params
        out = f"unshell u={u} ports=" + ",".join(map(str, S))
        return out if name is None else out + f" name={name}"
    if rec.kind == "shell":
        return f"shell v={rec.params[0]}"
    raise ValueError(f"unknown move kind {rec.kind!r}")


def parse_move(text: str, line: int = 1) -> MoveRecord:
    toks = text.split()
    if not toks:
        raise ParseError(line, "empty move")
    kind = toks[0]
    try:
        if kind == "rot" and len(toks) in (3, 4) and (len(toks) == 3 or toks[2] == "perm"):
            return MoveRecord.rot(parse_name(toks[1]), _perm(toks[-1], line))
        opts = {}
        for tok in toks[1:]:
            if "=" not in tok:
                raise ParseError(line, f"expected key=value, got {tok!r}")
            key, val = tok.split("=", 1)
            opts[key] = val
        if kind == "bistellar" and {"seed", "sphere-map"} <= set(opts) <= {"seed", "sphere-map", "names"}:
            index = {}
            for item in _split_top(opts["sphere-map"]):
                v, i = _split_port(item, line)
                index[v] = i
            names = [parse_name(x) for x in _split_top(opts["names"])] if "names" in opts else None
            return MoveRecord.bistellar(parse_name(opts["seed"]), index, names)
        if kind == "unshell" and {"u", "ports"} <= set(opts) <= {"u", "ports", "name"}:
            ports = [int(x) for x in opts["ports"].split(",")] if opts["ports"] else []
            name = parse_name(opts["name"]) if "name" in opts else None
            return MoveRecord.unshell(parse_name(opts["u"]), ports, name)
        if kind == "shell" and set(opts) == {"v"}:
            return MoveRecord.shell(parse_name(opts["v"]))
    except ValueError as exc:
        raise ParseError(line, str(exc)) from None
    raise ParseError(line, f"malformed move {text!r}")


def parse_moves(text: str) -> list:
    out = []
    for k, raw in enumerate(text.splitlines(), 1):
        t = _strip(raw)
        if t:
            out.append((k, parse_move(t, k)))
    return out


def serialize_moves(records) -> str:
    return "".join(format_move(r) + "\n" for r in records)


# -- reports, witnesses, DOT --------------------------------------------------------------

def format_sequence(seq: RotationSequence) -> str:
    """One ``rot`` (even) or ``sym`` (odd) line per step."""
    return "".join(f"{'rot' if P.is_even(st.perm) else 'sym'} {st.vertex} perm {P.format_perm(st.perm)}\n"
                   for st in seq)


def parse_sequence(text: str) -> RotationSequence:
    steps = []
    for k, raw in enumerate(text.splitlines(), 1):
        toks = _strip(raw).split()
        if not toks:
            continue
        if len(toks) != 4 or toks[0] not in ("rot", "sym") or toks[2] != "perm":
            raise ParseError(k, "expected 'rot|sym <vertex> perm <images>'")
        r = _perm(toks[3], k)
        if P.is_even(r) != (toks[0] == "rot"):
            raise ParseError(k, f"{toks[0]} needs an {'even' if toks[0] == 'rot' else 'odd'} permutation")
        try:
            steps.append(VertexRotation(parse_name(toks[1]), r))
        except ValueError as exc:
            raise ParseError(k, str(exc)) from None
    return RotationSequence(tuple(steps))


def format_hinge(path: HingePath) -> str:
    """``hinge <u>:<ports> -> <u'>:<ports'> via <u:p>-<v:q> ...``"""
    via = " ".join(f"{u}:{p}-{v}:{q}" for u, p, gl, v, q in path.steps) or "(empty)"
    return f"hinge {path.start} -> {path.end} via {via}"


def format_report(items) -> str:
    """``key: value`` lines, one per item, in the given order."""
    return "".join(f"{k}: {v}\n" for k, v in items)


def format_gluing(gl) -> str:
    moved = [i for i, x in enumerate(gl) if x != i]
    if len(moved) == 2 and len(gl) <= 10:
        return f"s{moved[0]}{moved[1]}"
    return P.format_perm(gl)


def _q(name) -> str:
    return '"' + str(name).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph) -> str:
    out = ["graph G {"]
    for v in g.sorted_vertices():
        ports = ",".join(map(str, sorted(g.ports[v])))
        out.append(f'  {_q(v)} [label="{str(v)}\\n{{{ports}}}"];')
    for u, p, gl, v, q in g.undirected_edges():
        out.append(f'  {_q(u)} -- {_q(v)} [label="{p}↔{q} {format_gluing(gl)}"];')
    for u, p in sorted(g.semi_edges(), key=lambda x: (name_key(x[0]), x[1])):
        stub = _q(f"{u}:{p}")
        out.append(f"  {stub} [shape=point];")
        out.append(f'  {_q(u)} -- {stub} [label="{p}", style=dashed];')
    out.append("}")
    return "\n".join(out) + "\n"
