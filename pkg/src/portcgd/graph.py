"""Port graphs encoding pseudo-manifolds.

Each vertex is an n-simplex; it uses ``n+1`` of the ``n+2`` ports
``{0..n+1}``.  An edge ``(u:p, g, v:q)`` glues the facet of ``u`` opposite
``p`` onto the facet of ``v`` opposite ``q``; ``g`` is an odd permutation with
``g(p) == q`` mapping the ports of ``u`` onto those of ``v``.  A port that is
used but not glued is a semi-edge.

Edges are stored as directed half-edges ``(u, p) -> (v, q, g)``; a well-formed
graph holds both orientations.  Graphs are treated as immutable values.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from . import perm as P
from .names import Name, name_key, sort_names


class GraphError(ValueError):
    """Raised when an operation receives an ill-formed or incompatible graph."""


class InconsistentGraphs(GraphError):
    def __init__(self, message: str, vertex=None, port=None):
        super().__init__(message)
        self.vertex = vertex
        self.port = port


@dataclass(frozen=True)
class Violation:
    condition: str  # semi-vs-edge | unique-edge | port-count | gluing | closure | parity | unknown-vertex
    vertex: object
    port: Optional[int]
    detail: str
    line: Optional[int] = None

    def __str__(self):
        loc = f"{self.vertex}" if self.port is None else f"{self.vertex}:{self.port}"
        where = f" (line {self.line})" if self.line is not None else ""
        return f"{self.condition} at {loc}{where}: {self.detail}"


@dataclass(frozen=True, eq=True)
class Graph:
    dim: int
    ports: Mapping = field(default_factory=dict)
    edges: Mapping = field(default_factory=dict)
    labels: Mapping = field(default_factory=dict)

    # -- construction -------------------------------------------------
    @classmethod
    def build(cls, dim: int, ports: Mapping, edges: Iterable = (), labels: Mapping = None) -> "Graph":
        """Build from ``ports`` and undirected edge records ``(u, p, g, v, q)``.

        The reverse half-edge is added automatically.
        """
        pmap = {v: frozenset(ps) for v, ps in ports.items()}
        emap = {}
        for u, p, g, v, q in edges:
            g = tuple(g)
            for key, val in (((u, p), (v, q, g)), ((v, q), (u, p, P.inverse(g)))):
                if key in emap and emap[key] != val:
                    raise GraphError(f"port {key[0]}:{key[1]} glued twice")
                emap[key] = val
        return cls(dim, pmap, emap, dict(labels or {}))

    @property
    def size(self) -> int:
        """Size of the port alphabet, ``n + 2``."""
        return self.dim + 2

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.ports)

    def __len__(self):
        return len(self.ports)

    def __contains__(self, v):
        return v in self.ports

    def __hash__(self):
        return hash((self.dim, frozenset(self.ports.items()), frozenset(self.edges.items()),
                     frozenset(self.labels.items())))

    def label(self, v):
        return self.labels.get(v)

    def sorted_vertices(self) -> list:
        return sort_names(self.ports)

    def semi_edges(self) -> frozenset:
        return frozenset((v, p) for v, ps in self.ports.items() for p in ps if (v, p) not in self.edges)

    def free_ports(self, v) -> list:
        return sorted(p for p in self.ports[v] if (v, p) not in self.edges)

    def edge_at(self, v, p):
        """``(w, q, g)`` glued at ``v:p``, or None for a semi-edge."""
        return self.edges.get((v, p))

    def undirected_edges(self) -> list:
        """Each edge pair once, lexicographically smaller endpoint first."""
        out = []
        for (u, p), (v, q, g) in self.edges.items():
            if (name_key(u), p) <= (name_key(v), q):
                out.append((u, p, g, v, q))
        out.sort(key=lambda e: (name_key(e[0]), e[1], name_key(e[3]), e[4]))
        return out

    def neighbors(self, v) -> list:
        seen, out = set(), []
        for p in sorted(self.ports[v]):
            e = self.edges.get((v, p))
            if e is not None and e[0] not in seen:
                seen.add(e[0])
                out.append(e[0])
        return out

    def degree(self, v) -> int:
        return sum(1 for p in self.ports[v] if (v, p) in self.edges)

    # -- derived graphs ------------------------------------------------
    def induced(self, keep: Iterable) -> "Graph":
        """Induced subgraph; edges leaving ``keep`` become semi-edges."""
        keep = set(keep)
        ports = {v: self.ports[v] for v in keep}
        edges = {k: e for k, e in self.edges.items() if k[0] in keep and e[0] in keep}
        labels = {v: l for v, l in self.labels.items() if v in keep}
        return Graph(self.dim, ports, edges, labels)

    def rename(self, fn) -> "Graph":
        """Apply a vertex renaming (a callable or a mapping)."""
        if isinstance(fn, Mapping):
            m = fn
            fn = lambda x: m[x]
        ports = {fn(v): ps for v, ps in self.ports.items()}
        if len(ports) != len(self.ports):
            raise GraphError("renaming is not injective")
        edges = {(fn(u), p): (fn(v), q, g) for (u, p), (v, q, g) in self.edges.items()}
        labels = {fn(v): l for v, l in self.labels.items()}
        return Graph(self.dim, ports, edges, labels)

    def without(self, drop: Iterable) -> "Graph":
        drop = set(drop)
        return self.induced(v for v in self.ports if v not in drop)

    def distances(self, source, limit: Optional[int] = None) -> dict:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            if limit is not None and dist[u] >= limit:
                continue
            for w in self.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def components(self) -> list:
        seen, comps = set(), []
        for v in self.sorted_vertices():
            if v in seen:
                continue
            comp = set(self.distances(v))
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.ports) <= 1 or len(self.distances(next(iter(self.ports)))) == len(self.ports)


@dataclass(frozen=True)
class PointedDisk:
    graph: Graph
    center: object
    radius: int


def validate(g: Graph) -> list:
    """Return one :class:`Violation` per broken well-formedness condition."""
    out = []
    size = g.size
    for v, ps in g.ports.items():
        if len(ps) != g.dim + 1 or not all(0 <= p < size for p in ps):
            out.append(Violation("port-count", v, None,
                                 f"expected {g.dim + 1} ports in 0..{size - 1}, got {sorted(ps)}"))
    for (u, p), (v, q, gl) in g.edges.items():
        if u not in g.ports or v not in g.ports:
            out.append(Violation("unknown-vertex", u, p, f"edge to undeclared vertex {v}"))
            continue
        if p not in g.ports[u]:
            out.append(Violation("semi-vs-edge", u, p, "edge on undeclared port"))
        if len(gl) != size or sorted(gl) != list(range(size)):
            out.append(Violation("gluing", u, p, f"not a permutation of 0..{size - 1}"))
            continue
        if P.parity(gl) != -1:
            out.append(Violation("parity", u, p, f"gluing {P.format_perm(gl)} is even"))
        if gl[p] != q:
            out.append(Violation("gluing", u, p, f"gluing maps {p} to {gl[p]}, not {q}"))
        if P.apply_set(gl, g.ports[u]) != g.ports[v]:
            out.append(Violation("gluing", u, p,
                                 f"gluing does not map ports of {u} onto ports of {v}"))
        back = g.edges.get((v, q))
        if back != (u, p, P.inverse(gl)):
            out.append(Violation("closure", u, p, f"missing reverse edge at {v}:{q}"))
    out.sort(key=lambda x: (name_key(x.vertex), -1 if x.port is None else x.port, x.condition))
    return out


def is_valid(g: Graph) -> bool:
    return not validate(g)


def disk(g: Graph, v, r: int) -> PointedDisk:
    """The radius-``r`` disk: vertices within distance ``r+1`` of ``v``."""
    if v not in g.ports:
        raise GraphError(f"unknown vertex {v!r}")
    if r < 0:
        raise GraphError("radius must be nonnegative")
    keep = g.distances(v, limit=r + 1)
    return PointedDisk(g.induced(keep), v, r)


def consistent(g: Graph, h: Graph, strict: bool = True) -> bool:
    """Whether ``g`` and ``h`` agree on their shared vertices.

    ``strict`` follows the literal definition: every port of a shared vertex
    has the same status (same edge, or semi-edge) in both graphs.  The lenient
    mode lets an edge in one graph fill a semi-edge of the other, which is the
    reading under which rule outputs are glued together.
    """
    return conflict(g, h, strict) is None


def conflict(g: Graph, h: Graph, strict: bool = False):
    """First ``(vertex, port, reason)`` where ``g`` and ``h`` disagree, else None."""
    if g.dim != h.dim:
        raise GraphError("graphs of different dimension")
    shared = [v for v in g.ports if v in h.ports]
    for v in sort_names(shared):
        if g.ports[v] != h.ports[v]:
            return v, None, "port sets differ"
        if g.labels.get(v) != h.labels.get(v):
            return v, None, "labels differ"
        for p in sorted(g.ports[v]):
            a, b = g.edges.get((v, p)), h.edges.get((v, p))
            if a == b:
                continue
            if a is not None and b is not None:
                return v, p, "glued differently"
            if strict:
                return v, p, "edge versus semi-edge"
    return None


def union(graphs: Iterable[Graph], strict: bool = False) -> Graph:
    """Union of pairwise consistent graphs; edges fill semi-edges."""
    graphs = list(graphs)
    if not graphs:
        raise GraphError("empty union")
    dim = graphs[0].dim
    ports, edges, labels = {}, {}, {}
    for g in graphs:
        if g.dim != dim:
            raise GraphError("graphs of different dimension")
        for v, ps in g.ports.items():
            old = ports.get(v)
            if old is not None and old != ps:
                raise InconsistentGraphs(f"port sets of {v} differ", v)
            ports[v] = ps
        for v, lab in g.labels.items():
            if v in labels and labels[v] != lab:
                raise InconsistentGraphs(f"labels of {v} differ", v)
            labels[v] = lab
        for key, e in g.edges.items():
            old = edges.get(key)
            if old is not None and old != e:
                raise InconsistentGraphs(f"port {key[0]}:{key[1]} glued differently", *key)
            edges[key] = e
    if strict:
        for i, a in enumerate(graphs):
            for b in graphs[i + 1:]:
                c = conflict(a, b, strict=True)
                if c is not None:
                    raise InconsistentGraphs(f"{c[0]}:{c[1]} {c[2]}", c[0], c[1])
    return Graph(dim, ports, edges, labels)


def is_subgraph(small: Graph, big: Graph, exact=()) -> bool:
    """Vertices, port sets and edges of ``small`` appear in ``big``.

    Semi-edges of ``small`` may be glued in ``big`` except at the vertices
    listed in ``exact``, whose ports must match exactly.
    """
    exact = set(exact)
    for v, ps in small.ports.items():
        if big.ports.get(v) != ps:
            return False
        for p in ps:
            e = small.edges.get((v, p))
            if e is not None:
                if big.edges.get((v, p)) != e:
                    return False
            elif v in exact and (v, p) in big.edges:
                return False
    return True


def simplex(dim: int, name="u", ports: Optional[Iterable[int]] = None) -> Graph:
    """A lone n-simplex (all ports free); default port set ``{0..n}``."""
    ps = frozenset(range(dim + 1) if ports is None else ports)
    return Graph(dim, {name: ps}, {}, {})
