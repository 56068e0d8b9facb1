"""Canonical spheres, bistellar moves, shellings and discrete-manifold tests.

The canonical sphere of dimension ``n`` is the complete graph on
``v_0..v_{n+1}`` where ``v_i`` lacks port ``i`` and ``(v_i:j, s_ij, v_j:i)``.
A bistellar move replaces a piece ``H`` of such a sphere, found inside a host
graph, by its complement flipped with ``s_01``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional

from . import perm as P
from .canon import canonical_key
from .geometry import (Face, covering_semi_edges, equivalent_faces, hinge_classes, is_torsion_free,
                       star, torsion_pairs)
from .graph import Graph, GraphError, simplex
from .names import fresh_name, name_key, sort_names
from .rotation import apply_assignment


class MoveError(GraphError):
    pass


def canonical_sphere(n: int, names=None) -> Graph:
    size = n + 2
    names = list(names) if names is not None else [f"v{i}" for i in range(size)]
    if len(names) != size or len(set(names)) != size:
        raise ValueError(f"need {size} distinct names")
    ports = {names[i]: frozenset(range(size)) - {i} for i in range(size)}
    edges = [(names[i], j, P.transposition(size, i, j), names[j], i)
             for i in range(size) for j in range(i + 1, size)]
    return Graph.build(n, ports, edges)


def missing_port(g: Graph, v) -> int:
    (m,) = frozenset(range(g.size)) - g.ports[v]
    return m


# -- moves as records ---------------------------------------------------------

@dataclass(frozen=True)
class MoveRecord:
    """One graph-local Pachner move.

    kinds and parameters:
      ``rot``        vertex, perm
      ``bistellar``  seed, sphere-map (tuple of (vertex, index)), names or None
      ``unshell``    u, ports, name or None
      ``shell``      v

    Names, when given, are used for the created vertices; inverse records
    always carry them so that undoing a move restores the original names.
    """
    kind: str
    params: tuple

    @classmethod
    def rot(cls, v, perm):
        return cls("rot", (v, tuple(perm)))

    @classmethod
    def bistellar(cls, seed, index, names=None):
        return cls("bistellar", (seed, tuple(sorted(index.items(), key=lambda x: name_key(x[0]))),
                                 None if names is None else tuple(names)))

    @classmethod
    def unshell(cls, u, ports, name=None):
        return cls("unshell", (u, tuple(sorted(ports)), name))

    @classmethod
    def shell(cls, v):
        return cls("shell", (v,))


@dataclass(frozen=True)
class SphereEmbedding:
    """``H`` with its sphere indices, plus rotations applied beforehand."""
    seed: object
    index: tuple  # ((vertex, i), ...) sorted by vertex
    rotation: tuple = ()  # ((vertex, even perm), ...)

    @property
    def vertices(self) -> list:
        return [v for v, _ in self.index]

    def index_map(self) -> dict:
        return dict(self.index)

    def complement(self, size: int) -> list:
        used = {i for _, i in self.index}
        return [j for j in range(size) if j not in used]

    def records(self) -> list:
        out = [MoveRecord.rot(v, r) for v, r in self.rotation]
        out.append(MoveRecord.bistellar(self.seed, self.index_map()))
        return out

    def restoring_names(self, size: int) -> list:
        """Names of ``H`` in the order the inverse move creates them."""
        s01 = P.transposition(size, 0, 1)
        by_image = {s01[i]: h for h, i in self.index}
        return [by_image[j] for j in sorted(by_image)]


def _check_site(g: Graph, index: dict) -> Optional[str]:
    """Why ``index`` is not a sphere site in ``g`` (None if it is)."""
    size = g.size
    if not index or len(index) >= size:
        return "H must be a nonempty strict part of the sphere"
    if len(set(index.values())) != len(index):
        return "two vertices share a sphere index"
    back = {i: h for h, i in index.items()}
    for h, i in index.items():
        if h not in g.ports:
            return f"unknown vertex {h}"
        if g.ports[h] != frozenset(range(size)) - {i}:
            return f"ports of {h} do not match sphere vertex {i}"
        for p in g.ports[h]:
            e = g.edges.get((h, p))
            if p in back:
                if e != (back[p], i, P.transposition(size, i, p)):
                    return f"{h}:{p} is not the sphere edge towards {back[p]}"
            elif e is not None and e[0] in index:
                return f"{h}:{p} glues inside H off the sphere"
    return None


def _connected_sets(g: Graph, seed, max_size: int) -> list:
    """Connected vertex sets containing ``seed`` of size ``<= max_size``."""
    out = []
    seen = set()
    start = frozenset([seed])
    stack = [start]
    while stack:
        cur = stack.pop()
        if cur in seen:
            continue
        seen.add(cur)
        out.append(cur)
        if len(cur) >= max_size:
            continue
        for v in cur:
            for w in g.neighbors(v):
                if w not in cur:
                    stack.append(cur | {w})
    out.sort(key=lambda s: (len(s), sorted(name_key(v) for v in s)))
    return out


def find_sphere_embeddings(g: Graph, seed, rotations: bool = False, max_size: Optional[int] = None) -> list:
    """Bistellar sites containing ``seed``.

    Without rotations the sphere index of each vertex is its missing port, so
    each candidate set has at most one embedding.  With rotations every even
    rotation of the seed is tried and the other rotations are forced along a
    spanning tree.
    """
    if seed not in g.ports:
        raise GraphError(f"unknown vertex {seed!r}")
    size = g.size
    limit = size - 1 if max_size is None else min(max_size, size - 1)
    out = []
    seen = set()
    for H in _connected_sets(g, seed, limit):
        if not rotations:
            index = {h: missing_port(g, h) for h in H}
            if _check_site(g, index) is None:
                out.append(SphereEmbedding(seed, _sorted_items(index)))
            continue
        for r0 in P.even_perms(size):
            rho = _forced_rotations(g, H, seed, r0)
            if rho is None:
                continue
            rg = apply_assignment(g, rho)
            index = {h: missing_port(rg, h) for h in H}
            if _check_site(rg, index) is not None:
                continue
            rot = tuple((h, r) for h, r in _sorted_items(rho) if r != P.identity(size))
            emb = SphereEmbedding(seed, _sorted_items(index), rot)
            if emb not in seen:
                seen.add(emb)
                out.append(emb)
    return out


def _sorted_items(d: dict) -> tuple:
    return tuple(sorted(d.items(), key=lambda x: name_key(x[0])))


def _forced_rotations(g: Graph, H, seed, r0) -> Optional[dict]:
    size = g.size
    full = frozenset(range(size))
    rho = {seed: r0}
    queue = deque([seed])
    while queue:
        a = queue.popleft()
        ra = rho[a]
        (ia,) = full - P.apply_set(ra, g.ports[a])
        for p in sorted(g.ports[a]):
            e = g.edges.get((a, p))
            if e is None or e[0] not in H or e[0] in rho:
                continue
            b, q, gl = e
            x = ra[p]
            rho[b] = P.compose(P.compose(P.transposition(size, ia, x), ra), P.inverse(gl))
            queue.append(b)
    return rho if len(rho) == len(H) else None


def _new_names(g: Graph, seed, count: int) -> list:
    taken = set(str(v) for v in g.ports)
    out, k = [], 0
    for _ in range(count):
        name, k = fresh_name(taken, seed, k)
        taken.add(name)
        out.append(name)
        k += 1
    return out


def bistellar(g: Graph, emb: SphereEmbedding, names=None) -> Graph:
    """Replace ``H`` by its complement in the sphere, flipped by ``s_01``."""
    if emb.rotation:
        g = apply_assignment(g, dict(emb.rotation))
    index = emb.index_map()
    why = _check_site(g, index)
    if why:
        raise MoveError(f"illegal bistellar site: {why}")
    size = g.size
    s01 = P.transposition(size, 0, 1)
    J = emb.complement(size)
    names = list(names) if names is not None else _new_names(g, emb.seed, len(J))
    if any(v in g.ports for v in names) or len(set(names)) != len(names):
        raise MoveError("complement names collide with the host graph")
    new = dict(zip(J, names))
    ports = {v: ps for v, ps in g.ports.items() if v not in index}
    for j in J:
        ports[new[j]] = P.apply_set(s01, frozenset(range(size)) - {j})
    edges = {k: e for k, e in g.edges.items() if k[0] not in index and e[0] not in index}
    for i, j in combinations(J, 2):
        gl = P.compose(P.compose(s01, P.transposition(size, i, j)), s01)
        edges[(new[i], s01[j])] = (new[j], s01[i], gl)
        edges[(new[j], s01[i])] = (new[i], s01[j], P.inverse(gl))
    for h, i in index.items():
        for j in J:
            e = g.edges.get((h, j))
            if e is None:
                continue
            u, q, gl = e
            ng = P.compose(P.compose(gl, P.transposition(size, i, j)), s01)
            edges[(new[j], s01[i])] = (u, q, ng)
            edges[(u, q)] = (new[j], s01[i], P.inverse(ng))
    labels = {v: l for v, l in g.labels.items() if v not in index}
    return Graph(g.dim, ports, edges, labels)


def inverse_embedding(g_after: Graph, emb: SphereEmbedding, names=None) -> SphereEmbedding:
    """The site undoing ``bistellar(g, emb)`` inside its result."""
    size = g_after.size
    s01 = P.transposition(size, 0, 1)
    J = emb.complement(size)
    names = list(names) if names is not None else None
    if names is None:
        raise ValueError("complement names are required")
    index = {names[k]: s01[j] for k, j in enumerate(J)}
    return SphereEmbedding(names[0], _sorted_items(index))


def bistellar_with_names(g: Graph, emb: SphereEmbedding) -> tuple:
    """``(result, new names, inverse embedding)``."""
    base = apply_assignment(g, dict(emb.rotation)) if emb.rotation else g
    names = _new_names(base, emb.seed, len(emb.complement(g.size)))
    out = bistellar(g, emb, names)
    return out, names, inverse_embedding(out, emb, names)


# -- shellings ------------------------------------------------------------------

def shell_inverse(g: Graph, u, S, name=None) -> Graph:
    """Attach a fresh vertex ``v`` to the free ports ``S`` of ``u``."""
    return shell_inverse_named(g, u, S, name)[0]


def shell_inverse_named(g: Graph, u, S, name=None) -> tuple:
    if u not in g.ports:
        raise MoveError(f"unknown vertex {u!r}")
    S = sorted(set(S))
    if len(S) > g.dim:
        raise MoveError(f"at most {g.dim} ports may be glued, got {len(S)}")
    for p in S:
        if p not in g.ports[u] or (u, p) in g.edges:
            raise MoveError(f"port {u}:{p} is not free")
    size = g.size
    s01 = P.transposition(size, 0, 1)
    v = name if name is not None else _new_names(g, u, 1)[0]
    if v in g.ports:
        raise MoveError(f"name {v} is taken")
    ports = dict(g.ports)
    ports[v] = P.apply_set(s01, g.ports[u])
    edges = dict(g.edges)
    for p in S:
        edges[(u, p)] = (v, s01[p], s01)
        edges[(v, s01[p])] = (u, p, s01)
    return Graph(g.dim, ports, edges, dict(g.labels)), v


def shell_site(g: Graph, v):
    """``(u, S)`` if ``v`` is exactly a graph-local inverse shelling of ``u``."""
    if v not in g.ports:
        raise MoveError(f"unknown vertex {v!r}")
    s01 = P.transposition(g.size, 0, 1)
    glued = [(p, g.edges[(v, p)]) for p in sorted(g.ports[v]) if (v, p) in g.edges]
    if len(glued) > g.dim:
        raise MoveError(f"{v} has {len(glued)} edges, more than {g.dim}")
    targets = {e[0] for _, e in glued}
    if len(targets) > 1:
        raise MoveError(f"{v} is glued to several vertices")
    if not glued:
        return None, []
    (u,) = targets
    if u == v:
        raise MoveError(f"{v} is glued to itself")
    S = []
    for p, (w, q, gl) in glued:
        if gl != s01 or s01[q] != p:
            raise MoveError(f"edge {v}:{p} is not of the form (u:q, s01, v:s01(q))")
        S.append(q)
    if g.ports[v] != P.apply_set(s01, g.ports[u]):
        raise MoveError(f"ports of {v} are not s01(ports of {u})")
    return u, sorted(S)


def shell(g: Graph, v) -> Graph:
    """Remove ``v``; its edges become semi-edges of the vertex it hangs on."""
    shell_site(g, v)
    return g.without([v])


def shell_normalization(g: Graph, v) -> Optional[tuple]:
    """An even rotation at ``v`` after which ``shell`` applies, or None."""
    glued = [g.edges[(v, p)] for p in sorted(g.ports[v]) if (v, p) in g.edges]
    if not glued or len({e[0] for e in glued}) != 1 or glued[0][0] == v:
        return None
    s01 = P.transposition(g.size, 0, 1)
    # (v:p, g, u:q) becomes (v:rho(p), g o rho^-1, u:q); ask for s01
    rho = P.compose(s01, glued[0][2])
    if not P.is_even(rho):
        return None
    rg = apply_assignment(g, {v: rho})
    try:
        shell_site(rg, v)
    except MoveError:
        return None
    return rho


# -- standard shellings -------------------------------------------------------

def _covering_faces(g: Graph, f: Face) -> list:
    """``(u_i, p_i, F_i)``: covering semi-edge with the equivalent face it covers."""
    out = []
    for h in sorted(equivalent_faces(g, f), key=Face.sort_key):
        for p in sorted(g.ports[h.vertex] - h.ports):
            if (h.vertex, p) not in g.edges:
                out.append((h.vertex, p, h))
    return out


def standard_shell_inverse(g: Graph, f: Face, name=None) -> Graph:
    return standard_shell_inverse_named(g, f, name)[0]


def standard_shell_inverse_named(g: Graph, f: Face, name=None) -> tuple:
    """Attach a fresh vertex on the ``n - k`` covering semi-edges of ``f``.

    The literal ``(u_i:p_i, s01, v:s01(p_i))`` gluings are used when they are
    well typed (all ``u_i`` then share one port set).  Otherwise the gluings
    ``g_i`` are searched, lexicographically, so that all ``g_i(F_i)`` are one
    face of ``v``; a choice creating torsion is skipped.
    """
    cover = _covering_faces(g, f)
    semis = sorted({(u, p) for u, p, _ in cover}, key=lambda x: (name_key(x[0]), x[1]))
    need = g.dim - f.k
    if len(semis) != need or not semis:
        raise MoveError(f"face {f} has {len(semis)} covering semi-edges, expected {need}")
    if len(cover) != len(semis):
        raise MoveError(f"face {f} is torsioned: a semi-edge covers several equivalent faces")
    size = g.size
    s01 = P.transposition(size, 0, 1)
    v = name if name is not None else _new_names(g, f.vertex, 1)[0]
    if v in g.ports:
        raise MoveError(f"name {v} is taken")
    before = set(torsion_pairs(g))

    def attempt(vports, glus):
        ports = dict(g.ports)
        ports[v] = vports
        edges = dict(g.edges)
        for (u, p, _), gl in zip(cover, glus):
            edges[(u, p)] = (v, gl[p], gl)
            edges[(v, gl[p])] = (u, p, P.inverse(gl))
        out = Graph(g.dim, ports, edges, dict(g.labels))
        if not set(torsion_pairs(out)) <= before:
            return None
        if covering_semi_edges(out, f):
            return None
        return out

    vp = {P.apply_set(s01, g.ports[u]) for u, _, _ in cover}
    qs = [s01[p] for _, p, _ in cover]
    if len(vp) == 1 and len(set(qs)) == len(qs):
        out = attempt(vp.pop(), [s01] * len(cover))
        if out is not None:
            return out, v
    full = frozenset(range(size))
    for m in range(size):
        vports = full - {m}
        options = []
        for u, p, F in cover:
            options.append([gl for gl in P.odd_perms(size)
                            if P.apply_set(gl, g.ports[u]) == vports])
        for glus in product(*options):
            qs = [gl[p] for gl, (_, p, _) in zip(glus, cover)]
            if len(set(qs)) != len(qs):
                continue
            if len({P.apply_set(gl, F.ports) for gl, (_, _, F) in zip(glus, cover)}) != 1:
                continue
            out = attempt(vports, list(glus))
            if out is not None:
                return out, v
    raise MoveError(f"every standard inverse shelling at {f} creates torsion")


# -- replay ---------------------------------------------------------------------

def apply_move(g: Graph, rec: MoveRecord) -> tuple:
    """Apply ``rec``; returns ``(graph, inverse records)``."""
    if rec.kind == "rot":
        v, r = rec.params
        if not P.is_even(r):
            raise MoveError(f"rotation at {v} is odd")
        if v not in g.ports:
            raise MoveError(f"unknown vertex {v!r}")
        return apply_assignment(g, {v: r}), [MoveRecord.rot(v, P.inverse(r))]
    if rec.kind == "bistellar":
        seed, index, names = rec.params
        emb = SphereEmbedding(seed, _sorted_items(dict(index)))
        names = list(names) if names is not None else _new_names(g, seed, len(emb.complement(g.size)))
        out = bistellar(g, emb, names)
        inv = inverse_embedding(out, emb, names)
        return out, [MoveRecord.bistellar(inv.seed, inv.index_map(), emb.restoring_names(g.size))]
    if rec.kind == "unshell":
        u, S, name = rec.params
        out, v = shell_inverse_named(g, u, S, name)
        return out, [MoveRecord.shell(v)]
    if rec.kind == "shell":
        (v,) = rec.params
        u, S = shell_site(g, v)
        if u is None:
            cands = [w for w in sort_names(g.ports)
                     if w != v and P.apply_set(P.transposition(g.size, 0, 1), g.ports[w]) == g.ports[v]]
            if not cands:
                raise MoveError(f"shelling isolated {v} cannot be inverted")
            u = cands[0]
        return shell(g, v), [MoveRecord.unshell(u, S, v)]
    raise MoveError(f"unknown move kind {rec.kind!r}")


def replay(g: Graph, records) -> Graph:
    for rec in records:
        g, _ = apply_move(g, rec)
    return g


def invert(g: Graph, records) -> list:
    """Records undoing ``records`` when applied to their result."""
    inv = []
    for rec in records:
        g, back = apply_move(g, rec)
        inv = back + inv
    return inv


# -- move search ------------------------------------------------------------------

def neighbour_moves(g: Graph, bistellar_moves: bool = True, shellings: bool = True):
    """Yield ``(records, result)`` for single graph-local Pachner moves
    (rotated bistellar moves carry their rotation records)."""
    seen_sites = set()
    if shellings:
        for v in g.sorted_vertices():
            rho = shell_normalization(g, v)
            if rho is not None:
                recs = ([MoveRecord.rot(v, rho)] if rho != P.identity(g.size) else []) + [MoveRecord.shell(v)]
                yield recs, replay(g, recs)
        for u in g.sorted_vertices():
            free = g.free_ports(u)
            for k in range(1, min(len(free), g.dim) + 1):
                for S in combinations(free, k):
                    rec = MoveRecord.unshell(u, S)
                    yield [rec], apply_move(g, rec)[0]
    if bistellar_moves:
        for seed in g.sorted_vertices():
            for emb in find_sphere_embeddings(g, seed, rotations=True):
                key = (frozenset(emb.vertices), emb.rotation, emb.index)
                if key in seen_sites:
                    continue
                seen_sites.add(key)
                recs = emb.records()
                yield recs, replay(g, recs)


def decompose_standard_shelling(g: Graph, f: Face, budget: int, max_states: int = 20000) -> Optional[list]:
    """Graph-local Pachner moves realising ``standard_shell_inverse(g, f)``.

    Breadth-first over move sequences of length ``<= budget``; states are
    identified up to renaming and rotation.  None when the budget runs out.
    """
    target = canonical_key(standard_shell_inverse(g, f), rotations=True)
    start = canonical_key(g, rotations=True)
    if start == target:
        return []
    seen = {start}
    frontier = [(g, [])]
    for _ in range(budget):
        nxt = []
        for cur, path in frontier:
            for recs, out in neighbour_moves(cur):
                if len(out) > len(g) + g.dim + 2:
                    continue
                key = canonical_key(out, rotations=True)
                if key == target:
                    return path + recs
                if key in seen or len(seen) >= max_states:
                    continue
                seen.add(key)
                nxt.append((out, path + recs))
        frontier = nxt
        if not frontier:
            break
    return None


# -- discrete manifolds --------------------------------------------------------------

@dataclass(frozen=True)
class FaceCounts:
    classes: tuple  # number of face classes per dimension k = 0..n
    border: tuple  # border face classes per dimension

    @property
    def euler(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.classes))

    @property
    def border_euler(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.border))


def face_counts(g: Graph) -> FaceCounts:
    """Face classes of the complex per dimension; top faces are the vertices."""
    hc = hinge_classes(g)
    M = 1 << hc.size
    n = g.dim
    classes = [0] * (n + 1)
    border = [0] * (n + 1)
    semis = g.semi_edges()
    by_root = hc.classes()
    for root, states in by_root.items():
        k = bin(root % M).count("1") - 1
        classes[k] += 1
        for st in states:
            v = hc.names[st // M]
            mask = st % M
            if any((v, p) in semis for p in g.ports[v] if not (mask >> p) & 1):
                border[k] += 1
                break
    return FaceCounts(tuple(classes), tuple(border[:n]))


@dataclass(frozen=True)
class ManifoldVerdict:
    verdict: str  # yes | no | unknown
    per_vertex: tuple  # ((vertex, verdict, reason), ...)

    def __str__(self):
        return self.verdict


def is_ball(g: Graph, budget: int = 200) -> tuple:
    """``(verdict, reason)``: is the complex of ``g`` an n-ball."""
    n = g.dim
    if len(g) == 0:
        return "no", "empty"
    if not g.is_connected():
        return "no", "disconnected"
    if not is_torsion_free(g):
        return "no", "torsion"
    fc = face_counts(g)
    if fc.euler != 1:
        return "no", f"euler characteristic {fc.euler}"
    if n <= 2:
        # connected, torsion-free, orientable surface (or curve) with chi = 1
        return "yes", "disk"
    if n == 3 and fc.border_euler != 2:
        return "no", f"boundary euler characteristic {fc.border_euler}"
    return _shell_down(g, budget)


def removable(g: Graph, v, hc=None) -> bool:
    """Whether removing ``v`` is a shelling: ``v`` meets the rest exactly in
    its glued facets, and no identification of the rest passes only through ``v``."""
    glued = [p for p in g.ports[v] if (v, p) in g.edges]
    if not glued or len(glued) > g.dim or any(g.edges[(v, p)][0] == v for p in glued):
        return False
    hc = hc or hinge_classes(g)
    rest = g.without([v])
    hr = hinge_classes(rest)
    M = 1 << hc.size
    vi = hc.index[v]
    members = hc.classes()
    ps = sorted(g.ports[v])
    for mask_bits in range(1, 1 << len(ps)):
        F = frozenset(ps[i] for i in range(len(ps)) if (mask_bits >> i) & 1)
        st = hc.state(Face(v, F))
        others = [s for s in members[hc.roots[st]] if s // M != vi]
        in_glued = any(p not in F for p in glued)
        if bool(others) != in_glued:
            return False
        if others:
            roots = {hr.roots[hr.state(hc.face(s))] for s in others}
            if len(roots) != 1:
                return False
    return True


def _shell_down(g: Graph, budget: int) -> tuple:
    """Greedy shelling; on a plateau, try bistellar moves up to ``budget``."""
    seen = set()
    frontier = [g]
    spent = 0
    while frontier:
        cur = frontier.pop(0)
        while len(cur) > 1:
            hc = hinge_classes(cur)
            for v in cur.sorted_vertices():
                if removable(cur, v, hc):
                    cur = cur.without([v])
                    break
            else:
                break
        if len(cur) == 1:
            return "yes", "shelled to a simplex"
        key = canonical_key(cur)
        if key in seen:
            continue
        seen.add(key)
        for seed in cur.sorted_vertices():
            for emb in find_sphere_embeddings(cur, seed, rotations=True):
                if spent >= budget:
                    return "unknown", f"budget {budget} exhausted"
                spent += 1
                frontier.append(bistellar(cur, emb))
    return "unknown", "move search exhausted"


def is_discrete_manifold(g: Graph, budget: int = 200) -> ManifoldVerdict:
    """Per vertex: does its star reduce to a single simplex."""
    cache = {}
    rows = []
    for u in g.sorted_vertices():
        st = star(g, u)
        key = canonical_key(st)
        if key not in cache:
            cache[key] = is_ball(st, budget)
        verdict, reason = cache[key]
        rows.append((u, verdict, reason))
    verdicts = {r[1] for r in rows}
    overall = "no" if "no" in verdicts else "unknown" if "unknown" in verdicts else "yes"
    return ManifoldVerdict(overall, tuple(rows))


def delta(n: int, name="u") -> Graph:
    """The lone simplex with ports ``{0..n}``."""
    return simplex(n, name)
