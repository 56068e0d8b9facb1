"""Exit criteria.  Each test prints one ``criterion N: PASS|FAIL`` line with
its runtime, whether or not its assertions hold."""
import contextlib
import random
import subprocess
import sys
import time

import pytest

from oracles import random_graph, surface_is_disk
from portcgd import io
from portcgd import perm as P
from portcgd.canon import isomorphic, isomorphic_up_to_rotation
from portcgd.corpus import fig4_cycle, random_bistellar, surfaces
from portcgd.dynamics import (BOUNDED_STAR, PROPERTIES, check_preservation,
                              check_strongly_rotation_commuting, collapse_rule, evaluate, identity_output, identity_rule,
                              past_subgraph_holds, port_sensitive_identity_rule, strongify, subdivision_rule)
from portcgd.geometry import Face, HingePath, faces_at, is_normal_form, is_torsion_free, star, torsion_scan
from portcgd.graph import is_subgraph, union, validate
from portcgd.names import dot
from portcgd.pachner import (MoveRecord, apply_move, bistellar, bistellar_with_names, canonical_sphere,
                             find_sphere_embeddings, is_discrete_manifold, replay, shell, shell_inverse_named)
from portcgd.rotation import RotationSequence, apply_nets, apply_sequence, merge_rotations, sequence_from_assignment

pytestmark = pytest.mark.acceptance

@pytest.fixture
def criterion(capsys):
    @contextlib.contextmanager
    def run(number, title, limit):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            dt = time.perf_counter() - t0
            within = dt < limit
            verdict = "PASS" if ok and within else "FAIL"
            with capsys.disabled():
                print(f"\ncriterion {number}: {verdict}  {title}  ({dt:.2f}s, limit {limit}s)")
        assert within, f"criterion {number} took {dt:.1f}s, limit {limit}s"
    return run


def simple_hinges(g):
    """Every state-simple hinge path starting at a proper face."""
    for v in g.sorted_vertices():
        for f in faces_at(g, v):
            if len(f.ports) > g.dim:
                continue
            stack = [(HingePath(f), {f})]
            while stack:
                path, seen = stack.pop()
                yield path
                cur = path.end
                for p in sorted(g.ports[cur.vertex] - cur.ports):
                    e = g.edges.get((cur.vertex, p))
                    if e is None:
                        continue
                    w, q, gl = e
                    nxt = Face(w, P.apply_set(gl, cur.ports))
                    if nxt not in seen:
                        stack.append((path.extend((cur.vertex, p, gl, w, q)), seen | {nxt}))


def test_structural_soundness(criterion):
    with criterion(1, "canonical spheres are valid, torsion-free and in normal form", 1):
        for n in (1, 2, 3):
            g = canonical_sphere(n)
            assert validate(g) == []
            assert torsion_scan(g) == []
            count = 0
            for path in simple_hinges(g):
                assert is_normal_form(g, path)
                count += 1
            assert count > len(g)


def test_torsion_witness(criterion):
    with criterion(2, "four-tetrahedron cycle: normal closure clean, twisted closure torsioned", 1):
        assert torsion_scan(fig4_cycle(False)) == []
        found = torsion_scan(fig4_cycle(True))
        assert found
        t = found[0]
        assert t.face.vertex == t.other.vertex
        assert len(t.face.ports) == len(t.other.ports) == 1 and t.face.ports != t.other.ports
        assert t.hinge.start == t.face and t.hinge.end == t.other


def test_move_algebra(criterion):
    with criterion(3, "200 shell and bistellar round trips", 30):
        rng = random.Random(2024)
        base = [g for _, g in surfaces()] + [canonical_sphere(1), canonical_sphere(3)]
        trips = 0
        while trips < 200:
            if trips % 2 == 0:
                g = random_graph(rng, rng.choice((1, 2, 3)), rng.randrange(7))
                u = rng.choice(g.sorted_vertices())
                free = g.free_ports(u)
                S = rng.sample(free, rng.randrange(min(len(free), g.dim) + 1))
                out, v = shell_inverse_named(g, u, S)
                assert validate(out) == []
                assert shell(out, v) == g
            else:
                g = rng.choice(base)
                seed = rng.choice(g.sorted_vertices())
                embs = find_sphere_embeddings(g, seed)
                if not embs:
                    continue
                out, _, inv = bistellar_with_names(g, rng.choice(embs))
                assert validate(out) == []
                back = bistellar(out, inv)
                assert validate(back) == []
                assert isomorphic_up_to_rotation(back, g) is not None
            trips += 1


def test_rotation_commutation_and_merging(criterion):
    with criterion(4, "500 rotation commutation and merge checks", 30):
        rng = random.Random(99)
        k = 0
        while k < 500:
            g = random_graph(rng, rng.choice((1, 2, 3)), rng.randrange(1, 7))
            evens = P.even_perms(g.size)
            vs = g.sorted_vertices()
            if len(vs) < 2:
                continue
            k += 1
            if k % 2 == 0:
                u, v = rng.sample(vs, 2)
                ru, rv = rng.choice(evens), rng.choice(evens)
                a = RotationSequence.of([(u, ru), (v, rv)])
                b = RotationSequence.of([(v, rv), (u, ru)])
                assert apply_sequence(g, a) == apply_sequence(g, b)
            else:
                rho = {v: rng.choice(evens) for v in vs}
                A = set(rng.sample(vs, rng.randrange(1, len(vs) + 1)))
                B = (set(vs) - A) | set(rng.sample(vs, rng.randrange(len(vs) + 1)))
                if not B:
                    B = {vs[0]}
                ga, gb = g.induced(A), g.induced(B)
                sa = sequence_from_assignment({v: rho[v] for v in A})
                sb = sequence_from_assignment({v: rho[v] for v in B})
                merged = merge_rotations([(ga, sa), (gb, sb)])
                assert apply_nets(union([ga, gb]), merged) == union([apply_nets(ga, sa), apply_nets(gb, sb)])


def corpus20():
    rng = random.Random(5)
    out = [g for _, g in surfaces()][:12]
    out += [random_graph(rng, dim, 6) for dim in (1, 2, 3) for _ in range(3)]
    out += [canonical_sphere(3)]
    return out[:20]


def test_cgd_engine(criterion):
    with criterion(5, "identity, subdivision and past-subgraph checks", 120):
        corpus = corpus20()
        assert len(corpus) == 20
        for g in corpus:
            out = evaluate(identity_rule(g.dim, 1), g)
            assert isomorphic(out, g) is not None and out == g.rename(dot)
        g = canonical_sphere(2)
        f = subdivision_rule(2)
        for _ in range(3):
            h = evaluate(f, g)
            assert len(h) == 3 * len(g)
            assert validate(h) == [] and is_torsion_free(h)
            g = h
        for g in corpus:
            for f in (identity_rule(g.dim, 1), subdivision_rule(g.dim)):
                for r2 in (1, 2):
                    for v in g.sorted_vertices()[:3]:
                        assert past_subgraph_holds(f, g, v, r2)


def test_rotation_commutation(criterion):
    with criterion(6, "identity passes; the port-sensitive rule fails and strongifies", 300):
        assert check_strongly_rotation_commuting(identity_rule(2)).passed
        f = port_sensitive_identity_rule()
        assert check_strongly_rotation_commuting(f).verdict == "fail"
        s = strongify(f)
        assert check_strongly_rotation_commuting(s).passed
        for e in s.entries.values():
            assert is_subgraph(identity_output(e.disk, "0"), e.output)
        rng = random.Random(6)
        corpus = [canonical_sphere(1)] + [random_graph(rng, 1, rng.randrange(1, 9)) for _ in range(19)]
        for g in corpus:
            assert evaluate(s, g) == g.rename(dot)


def test_preservation(criterion):
    with criterion(7, "identity preserves all three; collapse breaks bounded-star", 600):
        f = identity_rule(2, 1)
        for prop in PROPERTIES:
            cert = check_preservation(f, prop, 1)
            assert cert.verdict == "pass", (prop, cert.condition)
            assert "capped" not in cert.scope
        g = collapse_rule()
        cert = check_preservation(g, BOUNDED_STAR, 1, src=check_strongly_rotation_commuting(g))
        assert cert.verdict == "fail"
        assert len(cert.witness[2].steps) > 2


def test_manifold_recognition(criterion):
    with criterion(8, "star verdicts agree with the disk oracle on 30 surfaces", 120):
        rng = random.Random(8)
        corpus = surfaces()
        for name, g in list(corpus):
            if len(corpus) >= 30:
                break
            if name.startswith(("octahedron", "icosahedron", "torus7", "strip-4", "closed-fan-6",
                                "annulus-4", "cone-sphere-5", "grid-torus", "strip-7", "annulus-3")):
                corpus.append((name + "-moved", random_bistellar(g, rng, 2)))
        assert len(corpus) == 30
        for name, g in corpus:
            verdict = is_discrete_manifold(g)
            for u, v, _ in verdict.per_vertex:
                assert (v == "yes") == surface_is_disk(star(g, u)), (name, u)
            if name.startswith("pinched"):
                assert verdict.verdict == "no"


def test_serialization(criterion, tmp_path):
    with criterion(9, "byte-stable round trips and deterministic replay", 10):
        graphs = [g for _, g in surfaces()] + [fig4_cycle(False), fig4_cycle(True)]
        graphs += [canonical_sphere(n) for n in (1, 2, 3)]
        for g in graphs:
            text = io.serialize_graph(g)
            assert io.serialize_graph(io.parse_graph(text)) == text
        for f in (identity_rule(2, 1), collapse_rule(), port_sensitive_identity_rule()):
            text = io.serialize_rule(f)
            assert io.serialize_rule(io.parse_rule(text)) == text
        g = canonical_sphere(2)
        rng = random.Random(9)
        records, cur = [], g
        for _ in range(6):
            v = rng.choice(cur.sorted_vertices())
            embs = find_sphere_embeddings(cur, v)
            if rng.random() < 0.5 or not embs:
                rec = MoveRecord.rot(v, rng.choice(P.even_perms(4)))
            else:
                e = rng.choice(embs)
                rec = MoveRecord.bistellar(e.seed, e.index_map())
            cur, _ = apply_move(cur, rec)
            records.append(rec)
        log = "".join(io.format_move(r) + "\n" for r in records)
        assert "".join(io.format_move(r) + "\n" for _, r in io.parse_moves(log)) == log
        assert replay(g, [r for _, r in io.parse_moves(log)]) == cur
        (tmp_path / "g.graph").write_text(io.serialize_graph(g))
        (tmp_path / "moves.log").write_text(log)
        outs = []
        for k in range(2):
            out = tmp_path / f"out{k}.graph"
            subprocess.run([sys.executable, "-m", "portcgd.cli", "replay", str(tmp_path / "g.graph"),
                            str(tmp_path / "moves.log"), "--out", str(out)], check=True, capture_output=True)
            outs.append(out.read_bytes())
        assert outs[0] == outs[1] == io.serialize_graph(cur).encode()
