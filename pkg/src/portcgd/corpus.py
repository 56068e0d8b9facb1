"""Small complexes used by the tests, the acceptance suite and the sample data."""
from __future__ import annotations

import random
from collections import deque

from . import perm as P
from .graph import Graph, GraphError
from .pachner import canonical_sphere, delta, find_sphere_embeddings, bistellar_with_names


def _gluing(sa: tuple, i: int, sb: tuple, j: int) -> tuple:
    """Port map of the facet ``sa`` minus position ``i`` onto ``sb`` minus ``j``."""
    img = list(range(len(sa) + 1))
    for x in range(len(sa)):
        img[x] = j if x == i else sb.index(sa[x])
    return tuple(img)


def _orient(simplices: list) -> list:
    """Reorder simplices so that every gluing is odd (propagated per component)."""
    simplices = [tuple(s) for s in simplices]
    facets = {}
    for k, s in enumerate(simplices):
        for i in range(len(s)):
            facets.setdefault(frozenset(s[:i] + s[i + 1:]), []).append(k)
    out = [None] * len(simplices)
    for start in range(len(simplices)):
        if out[start] is not None:
            continue
        out[start] = simplices[start]
        queue = deque([start])
        while queue:
            k = queue.popleft()
            s = out[k]
            for i in range(len(s)):
                for j in facets[frozenset(s[:i] + s[i + 1:])]:
                    if j == k:
                        continue
                    t = out[j] or simplices[j]
                    (extra,) = set(t) - set(s)
                    if out[j] is None:
                        if not P.is_odd(_gluing(s, i, t, t.index(extra))):
                            t = (t[1], t[0]) + t[2:]
                        out[j] = t
                        queue.append(j)
                    elif not P.is_odd(_gluing(s, i, t, t.index(extra))):
                        raise GraphError("the complex is not orientable")
    return out


def from_simplices(dim: int, simplices, names=None, orient: bool = True) -> Graph:
    """Port graph of a pure complex given by point tuples.

    The point at position ``i`` of a simplex sits at port ``i``; port
    ``n+1`` is missing everywhere.  Simplices are reoriented coherently
    first, so gluings come out odd.
    """
    simplices = _orient(list(simplices)) if orient else [tuple(s) for s in simplices]
    size = dim + 2
    names = names or [f"t{k}" for k in range(len(simplices))]
    ports = {names[k]: frozenset(range(dim + 1)) for k in range(len(simplices))}
    facets = {}
    for k, s in enumerate(simplices):
        if len(s) != dim + 1 or len(set(s)) != dim + 1:
            raise GraphError(f"simplex {s} does not have {dim + 1} distinct points")
        for i in range(dim + 1):
            facets.setdefault(frozenset(s[:i] + s[i + 1:]), []).append((k, i))
    edges = []
    for face, occ in facets.items():
        if len(occ) > 2:
            raise GraphError(f"facet {sorted(face)} lies in more than two simplices")
        if len(occ) < 2:
            continue
        (a, i), (b, j) = occ
        sa, sb = simplices[a], simplices[b]
        gl = _gluing(sa, i, sb, j)
        if not P.is_odd(gl):
            raise GraphError(f"simplices {sa} and {sb} are not coherently oriented")
        edges.append((names[a], i, gl, names[b], j))
    return Graph.build(dim, ports, edges)


def octahedron() -> Graph:
    tris = [(a, b, c) for a in ("x+", "x-") for b in ("y+", "y-") for c in ("z+", "z-")]
    return from_simplices(2, tris)


def icosahedron() -> Graph:
    top, bot = "N", "S"
    up = [f"u{i}" for i in range(5)]
    lo = [f"l{i}" for i in range(5)]
    tris = []
    for i in range(5):
        j = (i + 1) % 5
        tris += [(top, up[i], up[j]), (bot, lo[i], lo[j]), (up[i], up[j], lo[i]), (up[j], lo[i], lo[j])]
    return from_simplices(2, tris)


def torus7() -> Graph:
    """The seven-point torus."""
    tris = []
    for i in range(7):
        tris += [(i, (i + 1) % 7, (i + 3) % 7), (i, (i + 2) % 7, (i + 3) % 7)]
    return from_simplices(2, tris)


def grid_torus(a: int = 3, b: int = 3) -> Graph:
    tris = []
    for i in range(a):
        for j in range(b):
            p = lambda x, y: (x % a, y % b)
            tris += [(p(i, j), p(i + 1, j), p(i + 1, j + 1)), (p(i, j), p(i + 1, j + 1), p(i, j + 1))]
    return from_simplices(2, tris)


def strip(k: int) -> Graph:
    """``k`` triangles in a zigzag strip (a disk)."""
    return from_simplices(2, [(i, i + 1, i + 2) for i in range(k)])


def fan(k: int, closed: bool = False) -> Graph:
    """``k`` triangles around a centre point; closed fans are disks too."""
    if closed:
        return from_simplices(2, [("c", i, (i + 1) % k) for i in range(k)])
    return from_simplices(2, [("c", i, i + 1) for i in range(k)])


def annulus(k: int) -> Graph:
    """A ring of ``2k`` triangles between two circles of ``k`` points."""
    tris = []
    for i in range(k):
        j = (i + 1) % k
        tris += [(f"a{i}", f"a{j}", f"b{i}"), (f"a{j}", f"b{j}", f"b{i}")]
    return from_simplices(2, tris)


def cone_sphere(k: int) -> Graph:
    """Suspension of a ``k``-gon (a sphere with two poles)."""
    tris = []
    for i in range(k):
        j = (i + 1) % k
        tris += [("N", i, j), ("S", i, j)]
    return from_simplices(2, tris)


def fig4_cycle(red: bool = False) -> Graph:
    """Four tetrahedra glued in a cycle around a segment.  The normal
    closure is torsion-free; the twisted closure identifies two distinct
    points of ``t0``."""
    s = lambda i, j: P.transposition(5, i, j)
    ports = {"t0": {0, 1, 2, 3}, "t1": {0, 1, 2, 4}, "t2": {0, 1, 3, 4}, "t3": {1, 2, 3, 4}}
    edges = [("t0", 3, s(3, 4), "t1", 4), ("t1", 2, s(2, 3), "t2", 3), ("t2", 0, s(0, 2), "t3", 2)]
    if red:
        edges.append(("t3", 4, (4, 2, 3, 1, 0), "t0", 0))
    else:
        edges.append(("t3", 4, s(0, 4), "t0", 0))
    return Graph.build(3, ports, edges)


def random_bistellar(g: Graph, rng: random.Random, moves: int) -> Graph:
    """Apply ``moves`` random bistellar moves found around random seeds."""
    for _ in range(moves):
        seeds = g.sorted_vertices()
        rng.shuffle(seeds)
        for seed in seeds:
            embs = find_sphere_embeddings(g, seed, max_size=g.dim + 1)
            if embs:
                g, _, _ = bistellar_with_names(g, rng.choice(embs))
                break
    return g


def surfaces() -> list:
    """``(name, graph)`` pairs of closed and bounded surfaces."""
    out = [("sphere", canonical_sphere(2)), ("octahedron", octahedron()), ("icosahedron", icosahedron()),
           ("torus7", torus7()), ("grid-torus", grid_torus(3, 3)), ("delta", delta(2))]
    out += [(f"cone-sphere-{k}", cone_sphere(k)) for k in (3, 5)]
    out += [(f"strip-{k}", strip(k)) for k in (2, 4, 7)]
    out += [(f"fan-{k}", fan(k)) for k in (2, 3)]
    out += [(f"closed-fan-{k}", fan(k, True)) for k in (3, 4, 6)]
    out += [(f"annulus-{k}", annulus(k)) for k in (3, 4)]
    out += [(f"pinched-{k}", pinched_ring(k)) for k in (4, 5)]
    return out


def pinched_ring(k: int) -> Graph:
    """A strip of ``k`` triangles whose end sides are glued.  For small
    ``k`` every star wraps around the ring, so no star is a disk."""
    from .dynamics import _glue_options
    from .geometry import is_torsion_free

    g = strip(k)
    a, b = "t0", f"t{k - 1}"
    for p in g.free_ports(a):
        for q in g.free_ports(b):
            for gl in _glue_options(g, a, p, b, q):
                edges = dict(g.edges)
                edges[(a, p)] = (b, q, gl)
                edges[(b, q)] = (a, p, P.inverse(gl))
                h = Graph(2, dict(g.ports), edges, {})
                if is_torsion_free(h):
                    return h
    raise GraphError(f"no torsion-free closure of a {k}-strip")
