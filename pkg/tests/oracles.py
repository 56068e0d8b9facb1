"""Independent reference implementations used to cross-check the library.

Everything here is written from the definitions with brute force and shares
no code with ``portcgd`` beyond the ``Graph`` container.
"""
from __future__ import annotations

import itertools
import random
from collections import deque

from portcgd.graph import Graph


# -- permutations ------------------------------------------------------------

def sign(p) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def perms(size: int, parity=None) -> list:
    out = []
    for p in itertools.permutations(range(size)):
        if parity is None or sign(p) == parity:
            out.append(p)
    return out


def comp(a, b):
    return tuple(a[b[x]] for x in range(len(b)))


def inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def image(p, xs) -> frozenset:
    return frozenset(p[x] for x in xs)


# -- random graphs -----------------------------------------------------------

def random_graph(rng: random.Random, dim: int, steps: int, glue_prob: float = 0.3) -> Graph:
    """Grow a valid graph from one simplex by attaching simplices and gluing
    free ports, choosing gluings uniformly among the legal ones."""
    size = dim + 2
    full = frozenset(range(size))
    odd = perms(size, -1)
    ports = {"a0": frozenset(rng.sample(range(size), dim + 1))}
    edges = {}
    for k in range(steps):
        free = sorted((v, p) for v in ports for p in ports[v] if (v, p) not in edges)
        if not free:
            break
        if len(free) >= 2 and rng.random() < glue_prob:
            (u, p), (w, q) = rng.sample(free, 2)
            cands = [g for g in odd if g[p] == q and image(g, ports[u]) == ports[w]]
            if cands:
                g = rng.choice(cands)
                edges[(u, p)] = (w, q, g)
                edges[(w, q)] = (u, p, inv(g))
            continue
        u, p = rng.choice(free)
        new = f"a{len(ports)}"
        vp = full - {rng.randrange(size)}
        cands = [g for g in odd if image(g, ports[u]) == vp]
        g = rng.choice(cands)
        ports[new] = vp
        edges[(u, p)] = (new, g[p], g)
        edges[(new, g[p])] = (u, p, inv(g))
    return Graph(dim, ports, edges, {})


# -- isomorphism by trying every bijection -----------------------------------

def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.dim != h.dim or len(g) != len(h):
        return False
    gv, hv = sorted(g.ports, key=str), sorted(h.ports, key=str)
    for img in itertools.permutations(hv):
        R = dict(zip(gv, img))
        if all(g.ports[v] == h.ports[R[v]] for v in gv) and \
                {(R[u], p): (R[v], q, gl) for (u, p), (v, q, gl) in g.edges.items()} == dict(h.edges):
            return True
    return False


def brute_rotation_equivalent(g: Graph, h: Graph) -> bool:
    if set(g.ports) != set(h.ports):
        return False
    verts = sorted(g.ports, key=str)
    evens = perms(g.size, 1)
    for combo in itertools.product(evens, repeat=len(verts)):
        rho = dict(zip(verts, combo))
        if all(image(rho[v], g.ports[v]) == h.ports[v] for v in verts):
            moved = {(a, rho[a][p]): (b, rho[b][q], comp(comp(rho[b], gl), inv(rho[a])))
                     for (a, p), (b, q, gl) in g.edges.items()}
            if moved == dict(h.edges):
                return True
    return False


# -- distances ---------------------------------------------------------------

def bfs_dist(g: Graph, src) -> dict:
    adj = {v: set() for v in g.ports}
    for (u, _), (v, _, _) in g.edges.items():
        adj[u].add(v)
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


# -- faces ---------------------------------------------------------------------

class UF:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def face_partition(g: Graph) -> UF:
    """Union-find over ``(vertex, face)``; one hinge step glues ``F`` at ``u``
    to ``g(F)`` at ``v`` when the crossed port lies outside ``F``."""
    uf = UF()
    for v, ps in g.ports.items():
        ps = sorted(ps)
        for k in range(1, len(ps) + 1):
            for F in itertools.combinations(ps, k):
                uf.find((v, frozenset(F)))
    for (u, p), (v, q, gl) in g.edges.items():
        rest = sorted(g.ports[u] - {p})
        for k in range(1, len(rest) + 1):
            for F in itertools.combinations(rest, k):
                uf.union((u, frozenset(F)), (v, image(gl, F)))
    return uf


def has_torsion(g: Graph) -> bool:
    uf = face_partition(g)
    seen = set()
    for st in list(uf.parent):
        key = (st[0], uf.find(st))
        if key in seen:
            return True
        seen.add(key)
    return False


def simple_hinge_max(g: Graph, limit: int) -> int:
    """Length of the longest state-simple hinge, exploring at most ``limit+1`` steps."""
    best = 0

    def dfs(state, seen, depth):
        nonlocal best
        best = max(best, depth)
        if depth > limit:
            return
        v, F = state
        for p in sorted(g.ports[v] - F):
            e = g.edges.get((v, p))
            if e is None:
                continue
            w, q, gl = e
            nxt = (w, image(gl, F))
            if nxt not in seen:
                seen.add(nxt)
                dfs(nxt, seen, depth + 1)
                seen.discard(nxt)

    for v, ps in g.ports.items():
        ps = sorted(ps)
        for k in range(1, len(ps)):
            for F in itertools.combinations(ps, k):
                st = (v, frozenset(F))
                dfs(st, {st}, 0)
    return best


# -- surfaces --------------------------------------------------------------------

def surface_is_disk(g: Graph) -> bool:
    """Decide whether the complex of a 2-dimensional port graph is a disk.

    Points and segments are face classes; the complex is a disk iff it is
    connected, every point link is a single path or cycle, exactly one
    boundary circle exists (at least one boundary segment, all boundary
    points on one cycle) and ``V - E + F == 1``.
    """
    assert g.dim == 2
    if not g.ports:
        return False
    if len(bfs_dist(g, next(iter(g.ports)))) != len(g):
        return False
    uf = face_partition(g)
    points, segs = {}, {}
    for (v, F) in list(uf.parent):
        r = uf.find((v, F))
        if len(F) == 1:
            points.setdefault(r, set()).add((v, F))
        elif len(F) == 2:
            segs.setdefault(r, set()).add((v, F))
    # a point class appearing twice at one vertex means a pinched triangle
    for cls in list(points.values()) + list(segs.values()):
        vs = [v for v, _ in cls]
        if len(vs) != len(set(vs)):
            return False
    if len(points) - len(segs) + len(g) != 1:
        return False
    # boundary segments: segment classes with a single triangle
    boundary = [r for r, cls in segs.items() if len(cls) == 1]
    if not boundary:
        return False
    # link of each point: triangles around it, adjacent through the segments at that point
    for r, cls in points.items():
        tris = {v for v, _ in cls}
        adj = {t: set() for t in tris}
        ends = 0
        for (v, F) in cls:
            (x,) = F
            for y in g.ports[v] - F:
                if len(g.ports[v] - {x, y}) != 1:
                    continue
                seg = uf.find((v, frozenset({x, y})))
                others = {w for w, _ in segs[seg] if w != v}
                if not others and len(segs[seg]) == 1:
                    ends += 1
                adj[v] |= others
        # connected link
        start = next(iter(tris))
        seen, stack = {start}, [start]
        while stack:
            t = stack.pop()
            for w in adj[t]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != tris or ends not in (0, 2):
            return False
    # one boundary circle: boundary segments connected through shared points
    bpoints = {}
    for r in boundary:
        ((v, F),) = segs[r]
        for x in F:
            bpoints.setdefault(uf.find((v, frozenset({x}))), []).append(r)
    buf = UF()
    for r in boundary:
        buf.find(r)
    for rs in bpoints.values():
        for a in rs[1:]:
            buf.union(rs[0], a)
    return len({buf.find(r) for r in boundary}) == 1


# -- pointed disks ----------------------------------------------------------------

def _matchings(items):
    """Every partial matching of ``items`` as a list of pairs."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for m in _matchings(rest):
        yield m
    for i, other in enumerate(rest):
        for m in _matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + m


def brute_disks(dim: int, radius: int, max_vertices: int, rotations: bool = False) -> list:
    """All pointed disks ``(graph, "c")`` with at most ``max_vertices``
    vertices, every vertex within ``radius + 1`` of the centre, one per
    class of pointed isomorphism (and rotations when asked)."""
    size = dim + 2
    full = frozenset(range(size))
    psets = [full - {m} for m in range(size)]
    odd = perms(size, -1)
    found = []
    for k in range(max_vertices):
        names = ["c"] + [f"x{i}" for i in range(k)]
        for choice in itertools.product(psets, repeat=len(names)):
            ports = dict(zip(names, choice))
            halves = [(v, p) for v in names for p in sorted(ports[v])]
            for m in _matchings(halves):
                options = []
                for (u, p), (w, q) in m:
                    options.append([g for g in odd if g[p] == q and image(g, ports[u]) == ports[w]])
                for gls in itertools.product(*options):
                    edges = {}
                    for ((u, p), (w, q)), g in zip(m, gls):
                        edges[(u, p)] = (w, q, g)
                        edges[(w, q)] = (u, p, inv(g))
                    g = Graph(dim, dict(ports), edges, {})
                    dist = bfs_dist(g, "c")
                    if len(dist) == len(names) and max(dist.values()) <= radius + 1:
                        found.append(g)
    classes = []
    for g in found:
        if not any(brute_pointed_equivalent(g, h, rotations) for h in classes):
            classes.append(g)
    return classes


def brute_pointed_equivalent(g: Graph, h: Graph, rotations: bool = False) -> bool:
    if len(g) != len(h):
        return False
    rest_g = sorted((v for v in g.ports if v != "c"), key=str)
    rest_h = sorted((v for v in h.ports if v != "c"), key=str)
    for img in itertools.permutations(rest_h):
        R = dict(zip(rest_g, img))
        R["c"] = "c"
        moved = Graph(g.dim, {R[v]: ps for v, ps in g.ports.items()},
                      {(R[u], p): (R[v], q, gl) for (u, p), (v, q, gl) in g.edges.items()}, {})
        if rotations:
            if brute_rotation_equivalent(moved, h):
                return True
        elif moved.ports == h.ports and dict(moved.edges) == dict(h.edges):
            return True
    return False
