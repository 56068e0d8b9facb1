"""Local rules, the dynamics they induce, and checkers for rule properties.

A local rule of radius ``r`` maps each pointed disk to a small output graph
whose vertex names are derived from the disk's names.  Rules are finite tables
keyed by canonical disk forms, plus an optional default behaviour used for
every disk not in the table.  The induced dynamics is the union of the
outputs over all disks of a graph.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Optional

from . import perm as P
from .canon import canonical_pointed
from .geometry import bounded_star_check, is_torsion_free, torsion_scan
from .graph import Graph, GraphError, InconsistentGraphs, PointedDisk, disk, is_subgraph, union
from .names import DerivedName, dot, name_key, rename_name
from .rotation import apply_assignment, rotation_equivalent

IDENTITY = "identity"
SUBDIVIDE = "subdivide"
DEFAULTS = (IDENTITY, SUBDIVIDE)


class RuleError(GraphError):
    pass


class UnmatchedDisk(RuleError):
    pass


@dataclass(frozen=True)
class Entry:
    key: tuple
    disk: Graph  # vertices named "0", "1", ... in canonical order; centre "0"
    output: Graph  # derived names over the disk's names


def _canonical_names(order) -> dict:
    return {v: str(i) for i, v in enumerate(order)}


def _bases(name) -> list:
    if isinstance(name, DerivedName):
        return list(name.parts)
    return [(name, None)]


class LocalRule:
    def __init__(self, radius: int, dim: int, bound: int = 1, default: Optional[str] = None):
        if radius < 0:
            raise RuleError("radius must be nonnegative")
        if default is not None and default not in DEFAULTS:
            raise RuleError(f"unknown default {default!r}")
        self.radius = radius
        self.dim = dim
        self.bound = bound
        self.default = default
        self.entries: dict = {}

    def __len__(self):
        return len(self.entries)

    def copy(self) -> "LocalRule":
        out = LocalRule(self.radius, self.dim, self.bound, self.default)
        out.entries = dict(self.entries)
        return out

    def add(self, g: Graph, center, output: Graph, replace: bool = False) -> Entry:
        """Add the entry ``disk(g, center, r) -> output``; output names are
        derived names over the names of ``g``."""
        if g.dim != self.dim or output.dim != self.dim:
            raise RuleError("dimension mismatch")
        d = disk(g, center, self.radius).graph
        if d != g:
            raise RuleError("entry graph is not a disk of the rule's radius around its centre")
        for v in output.ports:
            if not isinstance(v, DerivedName):
                raise RuleError(f"output vertex {v} is not a derived name")
            for base, suffix in v.parts:
                if base not in g.ports or suffix > self.bound:
                    raise RuleError(f"output vertex {v} is not built from the disk with suffixes <= {self.bound}")
        cf = canonical_pointed(g, center)
        ren = _canonical_names(cf.order)
        entry = Entry(cf.key, g.rename(ren), output.rename(lambda x: rename_name(x, ren.__getitem__)))
        old = self.entries.get(cf.key)
        if old is not None and old.output != entry.output and not replace:
            raise RuleError("two entries for isomorphic disks with different outputs")
        self.entries[cf.key] = entry
        return entry

    def lookup(self, d: PointedDisk) -> tuple:
        """``(entry or None, canonical order)`` for a disk."""
        cf = canonical_pointed(d.graph, d.center)
        return self.entries.get(cf.key), cf.order


def identity_rule(dim: int, radius: int = 0) -> LocalRule:
    return LocalRule(radius, dim, 1, IDENTITY)


def subdivision_rule(dim: int, radius: int = 0) -> LocalRule:
    return LocalRule(radius, dim, dim + 1, SUBDIVIDE)


# -- default behaviours ----------------------------------------------------------

def identity_output(g: Graph, c) -> Graph:
    """``{c}`` with its edges; neighbours appear with their ports only."""
    ports = {dot(c): g.ports[c]}
    edges = {}
    for p in g.ports[c]:
        e = g.edges.get((c, p))
        if e is None:
            continue
        w, q, gl = e
        ports.setdefault(dot(w), g.ports[w])
        edges[(dot(c), p)] = (dot(w), q, gl)
        edges[(dot(w), q)] = (dot(c), p, P.inverse(gl))
    labels = {dot(c): g.labels[c]} if c in g.labels else {}
    return Graph(g.dim, ports, edges, labels)


def _sub(v, j, g: Graph) -> DerivedName:
    return dot(v, sorted(g.ports[v]).index(j) + 1)


def subdivision_output(g: Graph, c) -> Graph:
    """The centre split as by the bistellar move on ``{c}``: one vertex
    ``{c.k}`` per port ``j`` of ``c`` (``k`` = rank of ``j``)."""
    size = g.size
    s01 = P.transposition(size, 0, 1)
    full = frozenset(range(size))
    (ic,) = full - g.ports[c]
    J = sorted(g.ports[c])
    ports, edges = {}, {}
    for j in J:
        ports[_sub(c, j, g)] = P.apply_set(s01, full - {j})
    for a in J:
        for b in J:
            if a != b:
                gl = P.compose(P.compose(s01, P.transposition(size, a, b)), s01)
                edges[(_sub(c, a, g), s01[b])] = (_sub(c, b, g), s01[a], gl)
    for j in J:
        e = g.edges.get((c, j))
        if e is None:
            continue
        w, q, gl = e
        (iw,) = full - g.ports[w]
        me, other = _sub(c, j, g), _sub(w, q, g)
        ng = P.compose(s01, P.compose(P.transposition(size, iw, q),
                                      P.compose(gl, P.compose(P.transposition(size, ic, j), s01))))
        ports.setdefault(other, P.apply_set(s01, full - {q}))
        edges[(me, s01[ic])] = (other, s01[iw], ng)
        edges[(other, s01[iw])] = (me, s01[ic], P.inverse(ng))
    return Graph(g.dim, ports, edges, {})


_DEFAULT_FNS: dict = {IDENTITY: identity_output, SUBDIVIDE: subdivision_output}


# -- application ------------------------------------------------------------------

def apply_rule(f: LocalRule, d: PointedDisk) -> Graph:
    if d.radius != f.radius:
        raise RuleError(f"disk radius {d.radius} differs from rule radius {f.radius}")
    entry, order = f.lookup(d)
    if entry is not None:
        back = {str(i): v for i, v in enumerate(order)}
        return entry.output.rename(lambda x: rename_name(x, back.__getitem__))
    if f.default is None:
        raise UnmatchedDisk(f"no entry for the disk around {d.center}")
    return _DEFAULT_FNS[f.default](d.graph, d.center)


def evaluate(f: LocalRule, g: Graph) -> Graph:
    """``F(g)``: union of the outputs over every disk of ``g``."""
    if g.dim != f.dim:
        raise RuleError("dimension mismatch")
    outs = []
    for v in g.sorted_vertices():
        outs.append((v, apply_rule(f, disk(g, v, f.radius))))
    if not outs:
        return Graph(g.dim, {}, {}, {})
    try:
        return union([o for _, o in outs])
    except InconsistentGraphs as exc:
        for i in range(len(outs)):
            for j in range(i + 1, len(outs)):
                try:
                    union([outs[i][1], outs[j][1]])
                except InconsistentGraphs:
                    raise InconsistentGraphs(
                        f"outputs at {outs[i][0]} and {outs[j][0]} disagree: {exc}", exc.vertex, exc.port)
        raise


def evolve(f: LocalRule, g: Graph, steps: int) -> Graph:
    for k in range(steps):
        try:
            g = evaluate(f, g)
        except RuleError as exc:
            raise RuleError(f"step {k + 1}: {exc}") from exc
        except InconsistentGraphs as exc:
            raise InconsistentGraphs(f"step {k + 1}: {exc}", exc.vertex, exc.port) from exc
    return g


def past_radius(r: int, r2: int) -> int:
    return 2 * r * r2 + r + r2


def past_subgraph_holds(f: LocalRule, g: Graph, v, r2: int) -> bool:
    """For each ``v'`` in ``f(g^r_v)``: the ``r2``-disk of ``v'`` in ``F(g)``
    is a subgraph of ``F(g^{2 r r2 + r + r2}_v)``."""
    Fg = evaluate(f, g)
    local = evaluate(f, disk(g, v, past_radius(f.radius, r2)).graph)
    for w in apply_rule(f, disk(g, v, f.radius)).ports:
        dd = disk(Fg, w, r2).graph
        inner = set(Fg.distances(w, limit=r2))
        if not is_subgraph(dd, local, exact=inner):
            return False
    return True


# -- certificates -------------------------------------------------------------------

PASS, FAIL, UNKNOWN = "pass", "fail", "unknown"


@dataclass(frozen=True)
class RuleCertificate:
    property: str
    verdict: str
    witness: Optional[object] = None
    condition: str = ""
    scope: str = ""
    checked: int = 0

    @property
    def passed(self) -> bool:
        return self.verdict == PASS


def _conjugates(a: Graph, b: Graph, limit: int = 64) -> list:
    """Per-vertex rotation assignments ``rho`` with ``rho a == b``."""
    if set(a.ports) != set(b.ports):
        return []
    first = rotation_equivalent(a, b)
    if first is None:
        return []
    per_comp = []
    for comp in a.components():
        sub_a, sub_b = a.induced(comp), b.induced(comp)
        opts = []
        root = min(comp, key=name_key)
        for r in P.even_perms(a.size):
            if P.apply_set(r, a.ports[root]) != b.ports[root]:
                continue
            from .rotation import _propagate
            rho = _propagate(sub_a, sub_b, root, r, comp)
            if rho is not None and apply_assignment(sub_a, rho) == sub_b:
                opts.append(rho)
        per_comp.append(opts)
    out = []
    for combo in product(*per_comp):
        merged = {}
        for rho in combo:
            merged.update(rho)
        out.append(merged)
        if len(out) >= limit:
            break
    return out


def _rotations_of(g: Graph, u) -> list:
    return [r for r in P.even_perms(g.size) if r != P.identity(g.size)]


def check_strongly_rotation_commuting(f: LocalRule, family: Optional[Iterable] = None,
                                      pair_limit: int = 64) -> RuleCertificate:
    """Finite check over the table entries (and ``family`` disks for defaults).

    (i) every single vertex rotation of an entry disk has a conjugate on the
    output; (ii) for the centre and each other vertex of an entry graph, the
    conjugates of every single vertex rotation on the two disks' outputs can be
    chosen to agree on the shared output vertices.
    """
    disks = [(e.disk, "0") for e in f.entries.values()]
    scope = f"{len(disks)} table entries"
    if family is not None:
        fam = [(d.graph, d.center) for d in family]
        disks += fam
        scope += f" + {len(fam)} family disks"
    elif f.default not in (None, IDENTITY):
        return RuleCertificate("strongly-rotation-commuting", UNKNOWN, None,
                               f"default {f.default} needs a disk family", scope)
    checked = 0
    for g, c in disks:
        base = apply_rule(f, PointedDisk(g, c, f.radius))
        for u in g.sorted_vertices():
            for r in _rotations_of(g, u):
                rg = apply_assignment(g, {u: r})
                out = apply_rule(f, PointedDisk(rg, c, f.radius))
                checked += 1
                if rotation_equivalent(base, out) is None:
                    return RuleCertificate(
                        "strongly-rotation-commuting", FAIL, (g, c, u, r),
                        f"no conjugate for rotation {P.format_perm(r)} at {u}", scope, checked)
    for g, c in disks:
        for v in g.sorted_vertices():
            if v == c:
                continue
            d1, d2 = disk(g, c, f.radius), disk(g, v, f.radius)
            o1, o2 = apply_rule(f, d1), apply_rule(f, d2)
            shared = set(o1.ports) & set(o2.ports)
            if not shared:
                continue
            for u in g.sorted_vertices():
                for r in _rotations_of(g, u):
                    rg = apply_assignment(g, {u: r})
                    ro1 = apply_rule(f, disk(rg, c, f.radius))
                    ro2 = apply_rule(f, disk(rg, v, f.radius))
                    checked += 1
                    c1 = _conjugates(o1, ro1, pair_limit)
                    c2 = _conjugates(o2, ro2, pair_limit)
                    if not c1 or not c2:
                        return RuleCertificate(
                            "strongly-rotation-commuting", FAIL, (g, c, u, r),
                            f"no conjugate for rotation {P.format_perm(r)} at {u}", scope, checked)
                    if not any(all(x[w] == y[w] for w in shared) for x in c1 for y in c2):
                        return RuleCertificate(
                            "strongly-rotation-commuting", FAIL, (g, c, v, u, r),
                            f"conjugates on the disks of {c} and {v} disagree for rotation at {u}",
                            scope, checked)
    scope += "; single vertex rotations; pairs (centre, other vertex) inside each entry graph"
    if f.default == IDENTITY:
        scope += "; identity default commutes by construction"
    return RuleCertificate("strongly-rotation-commuting", PASS, None, "", scope, checked)


def _assignments(g: Graph):
    verts = g.sorted_vertices()
    evens = P.even_perms(g.size)
    for combo in product(evens, repeat=len(verts)):
        yield dict(zip(verts, combo))


def _restrict_assignment(rho: dict, vertices) -> dict:
    return {v: r for v, r in rho.items() if v in vertices}


def strongify(f: LocalRule) -> LocalRule:
    """The table ``f~(D) = U r*^-1 f(rD)`` over all rotation assignments ``r``
    of each entry disk, with ``r*`` a conjugate of ``r`` for the induced map
    evaluated on ``D``; every rotated copy ``rD`` gets ``r* f~(D)``."""
    out = f.copy()
    out.entries = {}
    for entry in f.entries.values():
        D = entry.disk
        FD = evaluate(f, D)
        terms, conj = [], []
        for rho in _assignments(D):
            rD = apply_assignment(D, rho)
            FrD = evaluate(f, rD)
            seq = rotation_equivalent(FD, FrD)
            if seq is None:
                raise RuleError(f"no conjugate for a rotation of an entry disk: the induced map "
                                f"is not rotation-commuting ({_fmt_assignment(rho)})")
            star = seq.nets(D.size)
            conj.append((rho, rD, star))
            frD = apply_rule(f, PointedDisk(rD, "0", f.radius))
            inv = {v: P.inverse(r) for v, r in star.items() if v in frD.ports}
            terms.append(apply_assignment(frD, inv))
        try:
            tilde = union(terms)
        except InconsistentGraphs as exc:
            raise RuleError(f"rotated outputs are inconsistent: {exc}") from exc
        for rho, rD, star in conj:
            img = apply_assignment(tilde, _restrict_assignment(star, tilde.ports))
            out.add(rD, "0", img, replace=True)
    return out


def _fmt_assignment(rho: dict) -> str:
    return ", ".join(f"{v}:{P.format_perm(r)}" for v, r in sorted(rho.items(), key=lambda x: name_key(x[0])))


# -- enumeration ------------------------------------------------------------------------

@dataclass
class DiskEnumeration:
    dim: int
    radius: int
    disks: list = field(default_factory=list)
    complete: bool = False
    rotations: bool = False
    states: int = 0


def _attach_options(g: Graph, u, p, rotations: bool):
    size = g.size
    s01 = P.transposition(size, 0, 1)
    if rotations:
        yield P.apply_set(s01, g.ports[u]), s01
        return
    full = frozenset(range(size))
    for m in range(size):
        vp = full - {m}
        for gl in P.odd_perms(size):
            if P.apply_set(gl, g.ports[u]) == vp:
                yield vp, gl


def _glue_options(g: Graph, u, p, w, q):
    for gl in P.odd_perms(g.size):
        if gl[p] == q and P.apply_set(gl, g.ports[u]) == g.ports[w]:
            yield gl


def _children(g: Graph, dist: dict, radius: int, rotations: bool):
    verts = g.sorted_vertices()
    free = [(u, p) for u in verts for p in sorted(g.ports[u]) if (u, p) not in g.edges]
    new = str(len(g))
    for u, p in free:
        if dist[u] > radius:
            continue
        for vp, gl in _attach_options(g, u, p, rotations):
            ports = dict(g.ports)
            ports[new] = vp
            edges = dict(g.edges)
            edges[(u, p)] = (new, gl[p], gl)
            edges[(new, gl[p])] = (u, p, P.inverse(gl))
            yield Graph(g.dim, ports, edges, {})
    for i, (u, p) in enumerate(free):
        for w, q in free[i + 1:]:
            for gl in _glue_options(g, u, p, w, q):
                edges = dict(g.edges)
                edges[(u, p)] = (w, q, gl)
                edges[(w, q)] = (u, p, P.inverse(gl))
                yield Graph(g.dim, dict(g.ports), edges, {})


def enum_disks(dim: int, radius: int, bound_s: Optional[int] = None, torsion_free: bool = False,
               manifold: bool = False, cap: int = 10000, rotations: bool = False,
               max_states: Optional[int] = None, budget: int = 200,
               on_disk: Optional[Callable] = None) -> DiskEnumeration:
    """Pointed disks of the given radius up to isomorphism (and rotations).

    Disks grow from lone simplices (one per port set of the centre, or just
    one modulo rotations) by attaching a new simplex to a free port
    of a vertex at distance ``<= radius`` or by gluing two free ports.
    Bounded-star and torsion-freeness only get worse as a graph grows, so they
    prune; the manifold condition only filters.  ``on_disk`` may return True
    to stop early.
    """
    from .pachner import is_discrete_manifold

    res = DiskEnumeration(dim, radius, rotations=rotations)
    # without the rotation quotient every port set of the centre is its own class
    full = frozenset(range(dim + 2))
    starts = [Graph(dim, {"0": full - {m}}, {}, {}) for m in (range(dim + 2) if not rotations else [dim + 1])]
    seen = {canonical_pointed(s, "0", rotations).key for s in starts}
    layer = starts
    while layer:
        nxt = []
        for g in layer:
            res.states += 1
            keep = True
            if manifold and is_discrete_manifold(g, budget).verdict != "yes":
                keep = False
            if keep:
                if rotations:
                    cf = canonical_pointed(g, "0", True)
                    g = apply_assignment(g, cf.rotation)
                res.disks.append(PointedDisk(g, "0", radius))
                if on_disk is not None and on_disk(res.disks[-1]):
                    return res
                if len(res.disks) >= cap:
                    return res
            if max_states is not None and res.states >= max_states:
                return res
            dist = g.distances("0")
            for h in _children(g, dist, radius, rotations):
                key = canonical_pointed(h, "0", rotations).key
                if key in seen:
                    continue
                seen.add(key)
                if torsion_free and not is_torsion_free(h):
                    continue
                if bound_s is not None and not bounded_star_check(h, bound_s).bounded:
                    continue
                nxt.append(h)
        layer = nxt
    res.complete = True
    return res


# -- preservation ----------------------------------------------------------------------

BOUNDED_STAR = "bounded-star"
TORSION_FREE = "torsion-free"
MANIFOLD = "discrete-manifold"
PROPERTIES = (BOUNDED_STAR, TORSION_FREE, MANIFOLD)


def check_preservation(f: LocalRule, prop: str, r2: int = 1, budget: int = 200, cap: int = 100000,
                       rotations: Optional[bool] = None, src: Optional[RuleCertificate] = None
                       ) -> RuleCertificate:
    """Check ``prop`` is preserved on every ``2 r2``-bounded-star disk of radius
    ``2 r r2 + r + r2`` satisfying the hypotheses of ``prop``.

    The disks are enumerated up to rotation when the rule is certified
    strongly rotation-commuting (then outputs of rotated disks are rotated
    outputs).  Otherwise the quotient is only used to look for a failure and
    a clean run is reported as unknown.
    """
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}")
    if prop == MANIFOLD and f.dim > 3:
        raise RuleError("discrete-manifold preservation is only checked for n <= 3")
    s = 2 * r2
    R = past_radius(f.radius, r2)
    name = f"{prop}-preserving(s={s})"
    if src is None and rotations is None:
        src = check_strongly_rotation_commuting(f)
    if rotations is None:
        rotations = True
    sound_quotient = not rotations or (src is not None and src.passed)
    state = {"fail": None, "unknown": None, "checked": 0}

    def visit(d: PointedDisk) -> bool:
        state["checked"] += 1
        try:
            out = evaluate(f, d.graph)
        except (InconsistentGraphs, RuleError) as exc:
            state["fail"] = (d, f"rule output inconsistent: {exc}")
            return True
        if prop == BOUNDED_STAR:
            res = bounded_star_check(out, s)
            if not res.bounded:
                state["fail"] = (d, out, res.witness, f"hinge of length {res.longest} > {s}")
                return True
        elif prop == TORSION_FREE:
            bad = torsion_scan(out, limit=1)
            if bad:
                state["fail"] = (d, out, bad[0], "torsion in the output")
                return True
        else:
            from .pachner import is_discrete_manifold
            v = is_discrete_manifold(out, budget)
            if v.verdict == "no":
                state["fail"] = (d, out, v, "output is not a discrete manifold")
                return True
            if v.verdict == "unknown" and state["unknown"] is None:
                state["unknown"] = (d, out, v)
        return False

    enum = enum_disks(f.dim, R, bound_s=s, torsion_free=prop in (TORSION_FREE, MANIFOLD),
                      manifold=prop == MANIFOLD, cap=cap, rotations=rotations, budget=budget,
                      on_disk=visit)
    scope = (f"disks of radius {R}, {s}-bounded-star"
             + (", torsion-free" if prop in (TORSION_FREE, MANIFOLD) else "")
             + (", discrete manifold" if prop == MANIFOLD else "")
             + (", up to rotation" if rotations else "")
             + f"; {state['checked']} disks")
    if state["fail"] is not None:
        scope += " (stopped at the first failure)"
    elif not enum.complete:
        scope += f" (capped at {cap})"
    if state["fail"] is not None:
        w = state["fail"]
        return RuleCertificate(name, FAIL, w, w[-1], scope, state["checked"])
    if not enum.complete:
        return RuleCertificate(name, UNKNOWN, None, "enumeration capped", scope, state["checked"])
    if not sound_quotient:
        return RuleCertificate(name, UNKNOWN, None,
                               "rule not certified rotation-commuting; rotated disks not covered",
                               scope, state["checked"])
    if state["unknown"] is not None:
        return RuleCertificate(name, UNKNOWN, state["unknown"], "manifold recognition budget exhausted",
                               scope, state["checked"])
    return RuleCertificate(name, PASS, None, "", scope, state["checked"])


@dataclass(frozen=True)
class CertificateBundle:
    certificates: tuple

    @property
    def cdc(self) -> bool:
        return self.certificates[0].passed

    @property
    def cddm(self) -> bool:
        return all(c.passed for c in self.certificates)

    @property
    def all_pass(self) -> bool:
        return self.cddm


def certify_cddm(f: LocalRule, r2: int = 1, budget: int = 200, cap: int = 100000,
                 properties: Iterable[str] = PROPERTIES, family: Optional[Iterable] = None
                 ) -> CertificateBundle:
    src = check_strongly_rotation_commuting(f, family)
    certs = [src]
    for prop in properties:
        if budget <= 0 or cap <= 0:
            certs.append(RuleCertificate(f"{prop}-preserving(s={2 * r2})", UNKNOWN, None,
                                         "budget exhausted", "nothing enumerated"))
            continue
        certs.append(check_preservation(f, prop, r2, budget, cap, src=src))
    return CertificateBundle(tuple(certs))


# -- example rules ----------------------------------------------------------------------

def chain(dim: int, center_ports, arms) -> Graph:
    """A centre ``"c"`` with simplices attached in s01 form.

    ``arms`` maps a port of the centre to the number of simplices chained from
    it; each further link hangs off the lowest free port of the previous one.
    """
    size = dim + 2
    s01 = P.transposition(size, 0, 1)
    ports = {"c": frozenset(center_ports)}
    edges = {}
    for p, length in sorted(arms.items()):
        u, up = "c", p
        for k in range(length):
            v = f"{'abcdefgh'[p]}{k + 1}"
            ports[v] = P.apply_set(s01, ports[u])
            edges[(u, up)] = (v, s01[up], s01)
            edges[(v, s01[up])] = (u, up, s01)
            free = sorted(x for x in ports[v] if (v, x) not in edges)
            u, up = v, free[0] if free else None
    return Graph(dim, ports, edges, {})


def port_sensitive_identity_rule() -> LocalRule:
    """Radius 1, degree 2: the identity, except that a centre with ports
    ``{0, 1}`` in a long enough chain also emits its neighbours' edges.

    The induced map is still the identity, but the extra output vanishes
    when the centre is rotated, so the rule is not strongly
    rotation-commuting.
    """
    f = LocalRule(1, 1, 1, IDENTITY)
    for arms in ({0: 2, 1: 2}, {0: 2, 1: 1}):
        g = chain(1, {0, 1}, arms)
        parts = [identity_output(g, "c")] + [identity_output(g, w) for w in g.neighbors("c")]
        f.add(g, "c", union(parts))
    return f


def strip5() -> Graph:
    """Five triangles in a zigzag strip ``a2 - a1 - c - b1 - b2``."""
    s01 = (1, 0, 2, 3)
    return Graph.build(2, {"c": {1, 2, 3}, "a1": {0, 2, 3}, "b1": {0, 2, 3}, "a2": {1, 2, 3}, "b2": {1, 2, 3}},
                       [("c", 2, s01, "a1", 2), ("c", 3, s01, "b1", 3),
                        ("a1", 0, s01, "a2", 1), ("b1", 0, s01, "b2", 1)])


def collapse_rule() -> LocalRule:
    """Radius 1, dimension 2: the identity, except on a zigzag strip of five
    triangles, where the two neighbours of the centre get their free sides
    glued together.  Every point of the strip lies in at most three
    triangles; after the gluing one point lies in four."""
    g = strip5()
    a, b = "a1", "b1"
    (pa,) = g.free_ports(a)
    (pb,) = g.free_ports(b)
    out = union([identity_output(g, "c"), identity_output(g, a), identity_output(g, b)])
    gl = next(_glue_options(g, a, pa, b, pb))
    edges = dict(out.edges)
    edges[(dot(a), pa)] = (dot(b), pb, gl)
    edges[(dot(b), pb)] = (dot(a), pa, P.inverse(gl))
    f = LocalRule(1, 2, 1, IDENTITY)
    f.add(g, "c", Graph(2, dict(out.ports), edges, {}))
    return f


def twist_rule() -> LocalRule:
    """Radius 1, dimension 2: the identity, except on a strip of three
    triangles, where the two end triangles get free sides glued so that two
    distinct points of one triangle become the same point."""
    from .corpus import strip

    g = strip(3).rename({"t0": "a", "t1": "c", "t2": "b"})
    # key the entry on the rotation-canonical form, which the quotiented enumeration visits
    g = apply_assignment(g, canonical_pointed(g, "c", True).rotation)
    out = union([identity_output(g, v) for v in ("a", "c", "b")])
    for pa in g.free_ports("a"):
        for pb in g.free_ports("b"):
            for gl in _glue_options(g, "a", pa, "b", pb):
                edges = dict(out.edges)
                edges[(dot("a"), pa)] = (dot("b"), pb, gl)
                edges[(dot("b"), pb)] = (dot("a"), pa, P.inverse(gl))
                twisted = Graph(2, dict(out.ports), edges, {})
                if not is_torsion_free(twisted):
                    f = LocalRule(1, 2, 1, IDENTITY)
                    f.add(g, "c", twisted)
                    return f
    raise RuleError("no twisting gluing on the three-triangle strip")
