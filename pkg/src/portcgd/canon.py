"""Integer encodings, canonical forms and isomorphism of port graphs.

Ports make isomorphism cheap: from a fixed root, a breadth-first traversal
that explores ports in increasing order visits vertices in an order that any
isomorphism must preserve.  A canonical form is therefore the least such
traversal code over all roots (and, modulo rotations, over all rotations of
the root, the other rotations being forced by normalising tree edges).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import kernels
from . import perm as P
from .graph import Graph
from .names import name_key


class PermTables:
    def __init__(self, size: int):
        self.size = size
        self.perms = P.all_perms(size)
        self.index = {p: i for i, p in enumerate(self.perms)}
        n = self.nperm = len(self.perms)
        idx = self.index
        self.comp = [idx[P.compose(a, b)] for a in self.perms for b in self.perms]
        self.inv = [idx[P.inverse(a)] for a in self.perms]
        self.img = [a[x] for a in self.perms for x in range(size)]
        M = 1 << size
        self.maskimg = []
        for a in self.perms:
            for mask in range(M):
                out = 0
                for x in range(size):
                    if (mask >> x) & 1:
                        out |= 1 << a[x]
                self.maskimg.append(out)
        self.ident = idx[P.identity(size)]
        self.s01 = idx[P.transposition(size, 0, 1)]
        self.even = [idx[p] for p in P.even_perms(size)]
        assert n == len(self.inv)


@lru_cache(maxsize=None)
def tables(size: int) -> PermTables:
    return PermTables(size)


@dataclass
class Encoding:
    names: list
    index: dict
    nbr: list
    nq: list
    glu: list
    pmask: list
    lab: list
    P: int

    @property
    def nv(self):
        return len(self.names)


def encode(g: Graph, names=None) -> Encoding:
    size = g.size
    T = tables(size)
    names = list(names) if names is not None else g.sorted_vertices()
    index = {v: i for i, v in enumerate(names)}
    nv = len(names)
    nbr = [-2] * (nv * size)
    nq = [0] * (nv * size)
    glu = [0] * (nv * size)
    pmask = [0] * nv
    for i, v in enumerate(names):
        for p in g.ports[v]:
            pmask[i] |= 1 << p
            e = g.edges.get((v, p))
            if e is None:
                nbr[i * size + p] = -1
            else:
                w, q, gl = e
                nbr[i * size + p] = index[w]
                nq[i * size + p] = q
                glu[i * size + p] = T.index[gl]
    return Encoding(names, index, nbr, nq, glu, pmask, [0] * nv, size)


def _best_from(enc: Encoding, roots, rotations: bool):
    T = tables(enc.P)
    rots = T.even if rotations else [T.ident]
    best = None
    for r in roots:
        for rr in rots:
            res = kernels.bfs_code(enc.nbr, enc.nq, enc.glu, enc.lab, enc.P, enc.nv,
                                   r, rr, rotations, T, None if best is None else best[0])
            if res is not None:
                best = res
    return best


def _component_indices(enc: Encoding) -> list:
    seen = [False] * enc.nv
    comps = []
    for s in range(enc.nv):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for p in range(enc.P):
                w = enc.nbr[v * enc.P + p]
                if w >= 0 and not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class CanonicalForm:
    key: tuple
    order: tuple  # vertex names in canonical order
    rotation: Optional[dict]  # per-vertex rotation normalising the graph (rotation mode)


def _labels_key(g: Graph, order) -> tuple:
    if not g.labels:
        return ()
    return tuple(repr(g.labels.get(v)) for v in order)


def canonical_pointed(g: Graph, center, rotations: bool = False) -> CanonicalForm:
    """Canonical form of a connected graph with a distinguished vertex."""
    enc = encode(g)
    code, order, rho = _best_from(enc, [enc.index[center]], rotations)
    if len(order) != enc.nv:
        raise ValueError("pointed canonical form needs a connected graph")
    T = tables(enc.P)
    names = tuple(enc.names[i] for i in order)
    rot = {enc.names[i]: T.perms[rho[i]] for i in order} if rotations else None
    return CanonicalForm((g.dim, tuple(code), _labels_key(g, names)), names, rot)


def canonical(g: Graph, rotations: bool = False) -> CanonicalForm:
    """Canonical form of any graph, up to renaming (and rotations)."""
    enc = encode(g)
    T = tables(enc.P)
    parts = []
    for comp in _component_indices(enc):
        code, order, rho = _best_from(enc, comp, rotations)
        parts.append((tuple(code), tuple(order), tuple(rho)))
    parts.sort()
    order = tuple(enc.names[i] for _, o, _ in parts for i in o)
    rot = None
    if rotations:
        rot = {enc.names[i]: T.perms[r] for _, o, rh in parts for i in o for r in [rh[i]]}
    key = (g.dim, tuple(c for c, _, _ in parts), _labels_key(g, order))
    return CanonicalForm(key, order, rot)


def canonical_key(g: Graph, rotations: bool = False) -> tuple:
    return canonical(g, rotations).key


def isomorphic(g: Graph, h: Graph) -> Optional[dict]:
    """A renaming ``R`` (dict) with ``g.rename(R) == h``, or None."""
    if g.dim != h.dim or len(g) != len(h):
        return None
    cg, ch = canonical(g), canonical(h)
    if cg.key != ch.key:
        return None
    return dict(zip(cg.order, ch.order))


def pointed_isomorphic(g: Graph, cg, h: Graph, ch) -> Optional[dict]:
    if g.dim != h.dim or len(g) != len(h):
        return None
    a, b = canonical_pointed(g, cg), canonical_pointed(h, ch)
    if a.key != b.key:
        return None
    return dict(zip(a.order, b.order))


def isomorphic_up_to_rotation(g: Graph, h: Graph) -> Optional[tuple]:
    """``(R, rot)`` with ``rotate(g, rot).rename(R) == h``, or None."""
    from .rotation import apply_assignment

    if g.dim != h.dim or len(g) != len(h):
        return None
    cg, ch = canonical(g, True), canonical(h, True)
    if cg.key != ch.key:
        return None
    ren = dict(zip(cg.order, ch.order))
    # normalise g, then undo h's normalisation expressed on g's names
    rot = {}
    for v in g.ports:
        w = ren[v]
        rot[v] = P.compose(P.inverse(ch.rotation[w]), cg.rotation[v])
    assert apply_assignment(g, rot).rename(ren) == h
    return ren, rot


def canonical_relabel(g: Graph, center=None) -> tuple:
    """Rename vertices to ``"0", "1", ...`` in canonical order.

    Returns ``(graph, renaming)``.
    """
    cf = canonical_pointed(g, center) if center is not None else canonical(g)
    ren = {v: str(i) for i, v in enumerate(cf.order)}
    return g.rename(ren), ren


def sort_key(g: Graph) -> tuple:
    return tuple(name_key(v) for v in g.sorted_vertices())
