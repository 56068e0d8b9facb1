"""Vertex rotations and symmetries, rotation sequences, rotation equivalence.

A rotation ``r`` at ``u`` renames the ports of ``u`` through ``r``; every
incident gluing is conjugated so the geometry is unchanged.  Applying
per-vertex permutations ``rho`` all at once sends a half-edge
``(a:p, g, b:q)`` to ``(a:rho_a(p), rho_b o g o rho_a^-1, b:rho_b(q))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional

from . import perm as P
from .graph import Graph, GraphError, conflict, union, validate
from .names import name_key


class ParityError(GraphError):
    pass


@dataclass(frozen=True)
class VertexRotation:
    vertex: object
    perm: tuple

    @property
    def is_rotation(self) -> bool:
        return P.is_even(self.perm)


@dataclass(frozen=True)
class RotationSequence:
    steps: tuple = ()

    @classmethod
    def of(cls, pairs: Iterable) -> "RotationSequence":
        return cls(tuple(VertexRotation(v, tuple(p)) for v, p in pairs))

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def vertices(self) -> list:
        seen = {}
        for st in self.steps:
            seen.setdefault(st.vertex, None)
        return list(seen)

    def nets(self, size: int) -> dict:
        return {v: net_rotation(self, v, size) for v in self.vertices()}

    def inverse(self) -> "RotationSequence":
        return RotationSequence(tuple(VertexRotation(s.vertex, P.inverse(s.perm))
                                      for s in reversed(self.steps)))

    def then(self, other: "RotationSequence") -> "RotationSequence":
        return RotationSequence(self.steps + other.steps)


def identity_label_action(perm, label):
    return label


def apply_assignment(g: Graph, rho: Mapping, label_action: Callable = identity_label_action) -> Graph:
    """Apply the permutation ``rho[v]`` at every listed vertex simultaneously.

    No parity check: callers decide whether the result must be a graph.
    """
    if not rho:
        return g
    for v in rho:
        if v not in g.ports:
            raise GraphError(f"unknown vertex {v!r}")
    ident = P.identity(g.size)
    ports = {v: (P.apply_set(rho[v], ps) if v in rho else ps) for v, ps in g.ports.items()}
    edges = {}
    for (a, p), (b, q, gl) in g.edges.items():
        ra = rho.get(a, ident)
        rb = rho.get(b, ident)
        edges[(a, ra[p])] = (b, rb[q], P.compose(P.compose(rb, gl), P.inverse(ra)))
    labels = dict(g.labels)
    for v, r in rho.items():
        if v in labels:
            labels[v] = label_action(r, labels[v])
    return Graph(g.dim, ports, edges, labels)


def apply_rotation(g: Graph, rot: VertexRotation, label_action: Callable = identity_label_action) -> Graph:
    if not P.is_even(rot.perm):
        raise ParityError(f"rotation at {rot.vertex} is odd; use apply_symmetry_sequence")
    return apply_assignment(g, {rot.vertex: rot.perm}, label_action)


def apply_sequence(g: Graph, seq: RotationSequence, label_action: Callable = identity_label_action) -> Graph:
    """Apply the steps one after the other."""
    for st in seq:
        g = apply_rotation(g, st, label_action)
    return g


def apply_nets(g: Graph, seq: RotationSequence, label_action: Callable = identity_label_action) -> Graph:
    """Apply a rotation sequence through its per-vertex net rotations."""
    return apply_assignment(g, seq.nets(g.size), label_action)


def apply_symmetry_sequence(g: Graph, seq: RotationSequence,
                            label_action: Callable = identity_label_action) -> Graph:
    """Apply possibly odd per-vertex permutations; every gluing must stay odd."""
    rho = {}
    for st in seq:
        if st.vertex not in g.ports:
            raise GraphError(f"unknown vertex {st.vertex!r}")
        rho[st.vertex] = P.compose(st.perm, rho.get(st.vertex, P.identity(g.size)))
    out = apply_assignment(g, rho, label_action)
    bad = [v for v in validate(out) if v.condition == "parity"]
    if bad:
        raise ParityError(f"symmetry sequence leaves an even gluing: {bad[0]}")
    return out


def net_rotation(seq: RotationSequence, u, size: int) -> tuple:
    """Composition, in order, of the steps of ``seq`` acting at ``u``."""
    out = P.identity(size)
    for st in seq:
        if st.vertex == u:
            out = P.compose(st.perm, out)
    return out


def sequence_from_assignment(rho: Mapping) -> RotationSequence:
    ident = None
    steps = []
    for v in sorted(rho, key=name_key):
        r = rho[v]
        ident = ident or P.identity(len(r))
        if r != ident:
            steps.append(VertexRotation(v, tuple(r)))
    return RotationSequence(tuple(steps))


def merge_rotations(pairs: Iterable) -> RotationSequence:
    """One sequence acting on the union of the graphs as each sequence acts
    on its own graph.

    ``pairs`` holds ``(graph, sequence)``.  Only the steps at vertices of the
    paired graph are taken into account.
    """
    pairs = list(pairs)
    if not pairs:
        return RotationSequence()
    size = pairs[0][0].size
    ident = P.identity(size)
    rotated = [apply_nets(g.induced(g.ports), _restrict(seq, g)) for g, seq in pairs]
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            gi, si = pairs[i]
            gj, sj = pairs[j]
            c = conflict(gi, gj)
            if c is not None:
                raise GraphError(f"graphs {i} and {j} are inconsistent at {c[0]}:{c[1]} ({c[2]})")
            c = conflict(rotated[i], rotated[j])
            if c is not None:
                raise GraphError(f"rotated graphs {i} and {j} are inconsistent at {c[0]}:{c[1]} ({c[2]})")
            for v in gi.ports:
                if v in gj.ports and net_rotation(si, v, size) != net_rotation(sj, v, size):
                    raise GraphError(f"sequences {i} and {j} disagree at shared vertex {v}")
    # Pi_1 (vertices of G_1 only), Pi_2 (G_2 only), ..., then the shared ones
    seen_in = {}
    for i, (g, _) in enumerate(pairs):
        for v in g.ports:
            seen_in.setdefault(v, []).append(i)
    steps = []
    for i, (g, seq) in enumerate(pairs):
        for v in sorted(g.ports, key=name_key):
            if seen_in[v] == [i]:
                r = net_rotation(seq, v, size)
                if r != ident:
                    steps.append(VertexRotation(v, r))
    for v in sorted(seen_in, key=name_key):
        owners = seen_in[v]
        if len(owners) > 1:
            r = net_rotation(pairs[owners[0]][1], v, size)
            if r != ident:
                steps.append(VertexRotation(v, r))
    return RotationSequence(tuple(steps))


def _restrict(seq: RotationSequence, g: Graph) -> RotationSequence:
    return RotationSequence(tuple(s for s in seq if s.vertex in g.ports))


def rotation_equivalent(g: Graph, h: Graph, label_action: Callable = identity_label_action
                        ) -> Optional[RotationSequence]:
    """A rotation sequence turning ``g`` into ``h`` (same vertex names), or None.

    Within a connected component the rotation of one vertex forces all the
    others (``rho_b = g' o rho_a o g^-1`` along each edge), so the search tries
    each rotation of one root per component.
    """
    if g.dim != h.dim or set(g.ports) != set(h.ports):
        return None
    size = g.size
    evens = P.even_perms(size)
    rho = {}
    for comp in g.components():
        root = min(comp, key=name_key)
        found = None
        for r in evens:
            if P.apply_set(r, g.ports[root]) != h.ports[root]:
                continue
            trial = _propagate(g, h, root, r, comp)
            if trial is not None and _labels_match(g, h, trial, label_action):
                found = trial
                break
        if found is None:
            return None
        rho.update(found)
    return sequence_from_assignment(rho)


def _labels_match(g, h, rho, label_action) -> bool:
    for v in rho:
        if label_action(rho[v], g.labels.get(v)) != h.labels.get(v):
            return False
    return True


def _propagate(g: Graph, h: Graph, root, r, comp) -> Optional[dict]:
    rho = {root: r}
    stack = [root]
    while stack:
        a = stack.pop()
        ra = rho[a]
        if P.apply_set(ra, g.ports[a]) != h.ports[a]:
            return None
        for p in g.ports[a]:
            e = g.edges.get((a, p))
            he = h.edges.get((a, ra[p]))
            if e is None:
                if he is not None:
                    return None
                continue
            if he is None:
                return None
            b, q, gl = e
            hb, hq, hgl = he
            if hb != b:
                return None
            # hgl = rb o gl o ra^-1  =>  rb = hgl o ra o gl^-1
            rb = P.compose(P.compose(hgl, ra), P.inverse(gl))
            if b in rho:
                if rho[b] != rb:
                    return None
            else:
                if not P.is_even(rb):
                    return None
                rho[b] = rb
                stack.append(b)
            if rb[q] != hq:
                return None
    return rho


def rotation_is_equivalence_witness(g: Graph, h: Graph, seq: RotationSequence) -> bool:
    return apply_nets(g, seq) == h


__all__ = [
    "VertexRotation", "RotationSequence", "ParityError", "apply_rotation", "apply_sequence",
    "apply_nets", "apply_assignment", "apply_symmetry_sequence", "net_rotation",
    "merge_rotations", "rotation_equivalent", "sequence_from_assignment", "union",
]
