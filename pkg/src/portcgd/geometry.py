"""Faces, hinges, torsion and stars.

A k-face at ``u`` is a set of ``k+1`` ports of ``u`` (ports stand for the
simplex points opposite the glued facets).  Crossing an edge ``(u:p, g, v:q)``
with ``p`` outside the face carries the face to ``g(F)`` at ``v``; chains of
such steps are hinges and their closure defines face equivalence.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from . import kernels
from . import perm as P
from .canon import encode, tables
from .graph import Graph, GraphError
from .names import name_key


class FaceError(GraphError):
    pass


@dataclass(frozen=True, order=False)
class Face:
    vertex: object
    ports: frozenset

    def __post_init__(self):
        object.__setattr__(self, "ports", frozenset(self.ports))

    @property
    def k(self) -> int:
        return len(self.ports) - 1

    def sort_key(self):
        return (name_key(self.vertex), len(self.ports), tuple(sorted(self.ports)))

    def __str__(self):
        return f"{self.vertex}:{{{','.join(map(str, sorted(self.ports)))}}}"


@dataclass(frozen=True)
class HingePath:
    start: Face
    steps: tuple = ()  # (u, p, g, v, q) in traversal order

    @property
    def end(self) -> Face:
        f = self.start
        for u, p, g, v, q in self.steps:
            f = Face(v, P.apply_set(g, f.ports))
        return f

    def faces(self) -> list:
        out = [self.start]
        for u, p, g, v, q in self.steps:
            out.append(Face(v, P.apply_set(g, out[-1].ports)))
        return out

    def __len__(self):
        return len(self.steps)

    def extend(self, step) -> "HingePath":
        return HingePath(self.start, self.steps + (step,))


def check_face(g: Graph, f: Face):
    if f.vertex not in g.ports:
        raise FaceError(f"unknown vertex {f.vertex!r}")
    if not f.ports or not f.ports <= g.ports[f.vertex]:
        raise FaceError(f"face {f} is not a nonempty subset of the ports of {f.vertex}")


def faces_at(g: Graph, u, k: Optional[int] = None) -> list:
    ps = sorted(g.ports[u])
    out = []
    for mask in range(1, 1 << len(ps)):
        sub = frozenset(ps[i] for i in range(len(ps)) if (mask >> i) & 1)
        if k is None or len(sub) == k + 1:
            out.append(Face(u, sub))
    out.sort(key=Face.sort_key)
    return out


def transport(g: Graph, f: Face, edge) -> Face:
    """Carry ``f`` across ``edge`` = ``(u, p, g, v, q)`` (or a port of ``f.vertex``)."""
    if isinstance(edge, int):
        e = g.edge_at(f.vertex, edge)
        if e is None:
            raise FaceError(f"no edge at {f.vertex}:{edge}")
        edge = (f.vertex, edge) + e
    u, p, gl, v, q = edge
    if u != f.vertex:
        raise FaceError(f"edge starts at {u}, face lives at {f.vertex}")
    if p in f.ports:
        raise FaceError(f"port {p} belongs to the face {f}")
    img = P.apply_set(gl, f.ports)
    if q in img:
        raise FaceError(f"port {q} belongs to the transported face")
    return Face(v, img)


def _steps_from(g: Graph, f: Face):
    for p in sorted(g.ports[f.vertex] - f.ports):
        e = g.edges.get((f.vertex, p))
        if e is not None:
            v, q, gl = e
            yield (f.vertex, p, gl, v, q), Face(v, P.apply_set(gl, f.ports))


def equivalent_faces(g: Graph, f: Face) -> dict:
    """Every face equivalent to ``f`` mapped to a shortest witness hinge."""
    check_face(g, f)
    out = {f: HingePath(f)}
    queue = deque([f])
    while queue:
        cur = queue.popleft()
        for step, nxt in _steps_from(g, cur):
            if nxt not in out:
                out[nxt] = out[cur].extend(step)
                queue.append(nxt)
    return out


def hinge_between(g: Graph, f: Face, f2: Face) -> Optional[HingePath]:
    return equivalent_faces(g, f).get(f2)


def covering_semi_edges(g: Graph, f: Face) -> frozenset:
    out = set()
    for h in equivalent_faces(g, f):
        for p in g.ports[h.vertex] - h.ports:
            if (h.vertex, p) not in g.edges:
                out.add((h.vertex, p))
    return frozenset(out)


def is_border(g: Graph, f: Face) -> bool:
    return bool(covering_semi_edges(g, f))


# -- classes via the kernel ---------------------------------------------

@dataclass
class HingeClasses:
    """Union-find result over all (vertex, face) states of a graph."""
    graph: Graph
    names: list
    index: dict
    size: int
    roots: list

    def state(self, f: Face) -> int:
        mask = 0
        for p in f.ports:
            mask |= 1 << p
        return self.index[f.vertex] * (1 << self.size) + mask

    def face(self, st: int) -> Face:
        M = 1 << self.size
        v, mask = divmod(st, M)
        return Face(self.names[v], frozenset(x for x in range(self.size) if (mask >> x) & 1))

    def same(self, a: Face, b: Face) -> bool:
        return self.roots[self.state(a)] == self.roots[self.state(b)]

    def classes(self) -> dict:
        out = {}
        for st, r in enumerate(self.roots):
            if r >= 0:
                out.setdefault(r, []).append(st)
        return out


def hinge_classes(g: Graph) -> HingeClasses:
    enc = encode(g)
    roots = kernels.hinge_classes(enc.nbr, enc.nq, enc.glu, enc.pmask, enc.P, enc.nv, tables(enc.P))
    return HingeClasses(g, enc.names, enc.index, enc.P, roots)


@dataclass(frozen=True)
class Torsion:
    vertex: object
    face: Face
    other: Face
    hinge: HingePath


def torsion_pairs(g: Graph) -> list:
    """Pairs of distinct faces at one vertex lying in one class (no witnesses)."""
    hc = hinge_classes(g)
    M = 1 << hc.size
    out = []
    for r, states in hc.classes().items():
        byv = {}
        for st in states:
            byv.setdefault(st // M, []).append(st)
        for v, sts in byv.items():
            if len(sts) > 1:
                sts.sort()
                for i in range(len(sts)):
                    for j in range(i + 1, len(sts)):
                        out.append((hc.face(sts[i]), hc.face(sts[j])))
    out.sort(key=lambda ab: (ab[0].sort_key(), ab[1].sort_key()))
    return out


def is_torsion_free(g: Graph) -> bool:
    hc = hinge_classes(g)
    M = 1 << hc.size
    seen = set()
    for st, r in enumerate(hc.roots):
        if r >= 0:
            key = (st // M, r)
            if key in seen:
                return False
            seen.add(key)
    return True


def torsion_scan(g: Graph, limit: Optional[int] = None) -> list:
    """All torsions ``(u, F, F', hinge)``; empty for a torsion-free graph."""
    out = []
    cache = {}
    for a, b in torsion_pairs(g):
        if a not in cache:
            cache[a] = equivalent_faces(g, a)
        out.append(Torsion(a.vertex, a, b, cache[a][b]))
        if limit is not None and len(out) >= limit:
            break
    return out


# -- normal form ----------------------------------------------------------

def is_normal_form(g: Graph, path: HingePath) -> bool:
    for u, p, gl, v, q in path.steps:
        if g.edges.get((u, p)) != (v, q, gl):
            return False
        if gl != P.transposition(g.size, p, q):
            return False
        if g.ports[u] - {p} != g.ports[v] - {q}:
            return False
    return True


def try_normalize(g: Graph, path: HingePath):
    """Per-vertex rotations putting ``path`` in normal form, or None.

    Along a step ``(a:p, g, b:q)`` with ``a`` rotated by ``ra``, normal form
    requires the gluing ``s_{x y}`` with ``x = ra(p)`` and ``y`` the port
    missing at ``a``; that forces the rotation of ``b``.  Only the rotation of
    the first vertex is free, so the search is exhaustive over it, checking
    consistency wherever the path revisits a vertex.
    """
    from .rotation import apply_assignment, sequence_from_assignment

    steps = list(path.steps)
    size = g.size
    ident = P.identity(size)
    full = frozenset(range(size))
    if not steps:
        return sequence_from_assignment({})

    def go(rho):
        for a, p, gl, b, q in steps:
            ra = rho[a]
            x = ra[p]
            (y,) = full - P.apply_set(ra, g.ports[a])
            rb = P.compose(P.compose(P.transposition(size, x, y), ra), P.inverse(gl))
            old = rho.get(b)
            if old is not None and old != rb:
                return None
            rho[b] = rb
        return rho

    u0 = steps[0][0]
    for r0 in [ident] + [r for r in P.even_perms(size) if r != ident]:
        res = go({u0: r0})
        if res is not None:
            rotated = apply_assignment(g, res)
            moved = HingePath(Face(u0, P.apply_set(res[u0], path.start.ports)),
                              tuple((a, res[a][p], rotated.edges[(a, res[a][p])][2], b, res[b][q])
                                    for a, p, gl, b, q in steps))
            assert is_normal_form(rotated, moved)
            return sequence_from_assignment(res)
    return None


def cyclic_hinges(g: Graph, f: Face) -> list:
    """Shortest hinge from ``f`` back to each face at ``f.vertex`` through a
    nontrivial cycle, one per outgoing step."""
    out = []
    for step, nxt in _steps_from(g, f):
        seen = {nxt: HingePath(f, (step,))}
        queue = deque([nxt])
        while queue:
            cur = queue.popleft()
            if cur.vertex == f.vertex and len(seen[cur]) > 1:
                out.append(seen[cur])
                break
            for st, nf in _steps_from(g, cur):
                if nf not in seen and st[:2] != (step[3], step[4]):
                    seen[nf] = seen[cur].extend(st)
                    queue.append(nf)
    return out


# -- stars -------------------------------------------------------------------

def geometrical_neighbors(g: Graph, u, hc: Optional[HingeClasses] = None) -> set:
    hc = hc or hinge_classes(g)
    M = 1 << hc.size
    mine = {hc.roots[hc.state(f)] for f in faces_at(g, u)}
    out = {u}
    for st, r in enumerate(hc.roots):
        if r >= 0 and r in mine:
            out.add(hc.names[st // M])
    return out


def star(g: Graph, u) -> Graph:
    if u not in g.ports:
        raise GraphError(f"unknown vertex {u!r}")
    return g.induced(geometrical_neighbors(g, u))


@dataclass(frozen=True)
class BoundedStarResult:
    bounded: bool
    longest: int  # capped at s + 1
    witness: Optional[HingePath] = field(default=None)

    def __bool__(self):
        return self.bounded


def longest_hinge(g: Graph, limit: int) -> tuple:
    """``(length, HingePath)`` of a longest state-simple hinge, exploring up
    to ``limit + 1`` steps."""
    enc = encode(g)
    if enc.nv == 0:
        return 0, None
    T = tables(enc.P)
    length, states = kernels.longest_hinge(enc.nbr, enc.nq, enc.glu, enc.pmask, enc.P, enc.nv, T, limit)
    if not states:
        return 0, None
    M = 1 << enc.P
    v0, m0 = divmod(states[0], M)
    start = Face(enc.names[v0], frozenset(x for x in range(enc.P) if (m0 >> x) & 1))
    steps = []
    cur_v, cur_m = v0, m0
    for st in states[1:]:
        w, nm = divmod(st, M)
        for p in range(enc.P):
            if (cur_m >> p) & 1 or enc.nbr[cur_v * enc.P + p] != w:
                continue
            gi = enc.glu[cur_v * enc.P + p]
            if T.maskimg[gi * M + cur_m] == nm:
                steps.append((enc.names[cur_v], p, T.perms[gi], enc.names[w], enc.nq[cur_v * enc.P + p]))
                break
        cur_v, cur_m = w, nm
    return length, HingePath(start, tuple(steps))


def bounded_star_check(g: Graph, s: int) -> BoundedStarResult:
    if s < 1:
        raise ValueError("bound s must be at least 1")
    length, path = longest_hinge(g, s)
    return BoundedStarResult(length <= s, length, path)


def is_bounded_star(g: Graph, s: int) -> bool:
    return bounded_star_check(g, s).bounded
