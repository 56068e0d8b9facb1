import random

import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from oracles import bfs_dist, brute_isomorphic, random_graph
from portcgd import perm as P
from portcgd.canon import canonical, canonical_key, isomorphic
from portcgd.corpus import strip
from portcgd.graph import (Graph, GraphError, InconsistentGraphs, consistent, disk, is_subgraph,
                           simplex, union, validate)
from portcgd.pachner import canonical_sphere

S01 = (1, 0, 2, 3)


def two_triangles():
    return Graph.build(2, {"u": {0, 1, 2}, "v": {0, 1, 2}}, [("u", 0, (1, 0, 2, 3), "v", 1)])


# -- validate -------------------------------------------------------------------

def test_sphere_is_valid():
    assert validate(canonical_sphere(2)) == []


def test_lone_simplex_is_valid():
    g = simplex(2)
    assert validate(g) == [] and len(g.semi_edges()) == 3


def test_missing_reverse_edge():
    g = two_triangles()
    edges = dict(g.edges)
    del edges[("v", 1)]
    bad = validate(Graph(2, g.ports, edges, {}))
    assert [v.condition for v in bad] == ["closure"]
    assert bad[0].vertex == "u" and bad[0].port == 0


def test_each_condition_is_reported():
    even = Graph(2, {"u": frozenset({0, 1, 2}), "v": frozenset({0, 1, 2})},
                 {("u", 0): ("v", 0, (0, 1, 2, 3)), ("v", 0): ("u", 0, (0, 1, 2, 3))}, {})
    assert {v.condition for v in validate(even)} == {"parity"}
    wrong_q = Graph(2, even.ports, {("u", 0): ("v", 2, S01), ("v", 2): ("u", 0, S01)}, {})
    assert "gluing" in {v.condition for v in validate(wrong_q)}
    few = Graph(2, {"u": frozenset({0, 1})}, {}, {})
    assert [v.condition for v in validate(few)] == ["port-count"]
    off = Graph(2, {"u": frozenset({0, 1, 2}), "v": frozenset({0, 1, 3})},
                {("u", 2): ("v", 3, (0, 1, 3, 2)), ("v", 3): ("u", 2, (0, 1, 3, 2))}, {})
    assert validate(off) == []
    onto = Graph(2, {"u": frozenset({0, 1, 2}), "v": frozenset({0, 1, 2})},
                 {("u", 2): ("v", 2, (0, 3, 2, 1)), ("v", 2): ("u", 2, (0, 3, 2, 1))}, {})
    assert "gluing" in {v.condition for v in validate(onto)}


def test_build_rejects_double_gluing():
    with pytest.raises(GraphError):
        Graph.build(1, {"u": {0, 1}, "v": {0, 1}, "w": {0, 1}},
                    [("u", 0, (1, 0, 2), "v", 1), ("u", 0, (1, 0, 2), "w", 1)])


@given(graphs())
def test_random_graphs_are_valid(g):
    assert validate(g) == []


# -- disks ----------------------------------------------------------------------

def test_disk_of_single_edge_keeps_it():
    g = two_triangles()
    assert disk(g, "u", 0).graph == g


def test_disk_breaks_far_edges():
    g = strip(4)  # t0 - t1 - t2 - t3
    d = disk(g, "t0", 0).graph
    assert set(d.ports) == {"t0", "t1"}
    assert sum(1 for v, p in d.semi_edges() if v == "t1") == 2
    assert sum(1 for v, p in g.semi_edges() if v == "t1") == 1


def test_disk_of_sphere_is_whole_sphere():
    g = canonical_sphere(2)
    assert disk(g, "v0", 5).graph == g


def test_disk_unknown_vertex():
    with pytest.raises(GraphError):
        disk(simplex(1), "nope", 0)


@given(graphs(max_steps=8), st.integers(0, 3), st.data())
def test_disk_matches_bfs_and_grows(g, r, data):
    v = data.draw(st.sampled_from(sorted(g.ports)))
    d = disk(g, v, r).graph
    dist = bfs_dist(g, v)
    assert set(d.ports) == {w for w, k in dist.items() if k <= r + 1}
    assert validate(d) == []
    assert is_subgraph(d, disk(g, v, r + 1).graph)


# -- isomorphism ----------------------------------------------------------------

def test_identity_renaming():
    g = canonical_sphere(2)
    R = isomorphic(g, g)
    assert g.rename(R) == g


def test_sphere_relabelled():
    g = canonical_sphere(2)
    h = canonical_sphere(2, [f"w{i}" for i in range(4)])
    R = isomorphic(g, h)
    assert R == {f"v{i}": f"w{i}" for i in range(4)}


def test_simplex_versus_self_glued():
    # a triangle glued to itself along ports 0 and 1
    s = (1, 0, 2, 3)
    t = Graph.build(2, {"u": {0, 1, 2}}, [("u", 0, s, "u", 1)])
    assert validate(t) == []
    assert isomorphic(simplex(2), t) is None


@given(graphs(max_steps=4), st.integers(0, 2**32 - 1))
def test_isomorphism_agrees_with_brute_force(g, seed):
    rng = random.Random(seed)
    names = sorted(g.ports)
    shuffled = names[:]
    rng.shuffle(shuffled)
    h = g.rename(dict(zip(names, [f"z{x}" for x in shuffled])))
    R = isomorphic(g, h)
    assert R is not None and g.rename(R) == h
    other = random_graph(rng, g.dim, len(g) + rng.randrange(2))
    assert (isomorphic(g, other) is not None) == brute_isomorphic(g, other)


@given(graphs(max_steps=5), st.integers(0, 2**32 - 1))
def test_isomorphism_is_an_equivalence(g, seed):
    rng = random.Random(seed)
    names = sorted(g.ports)

    def relabel(x, tag):
        perm = names[:]
        rng.shuffle(perm)
        return x.rename(dict(zip(names, [f"{tag}{i}" for i in range(len(perm))])))

    h = relabel(g, "h")
    k = relabel(g, "k")
    gh, hg = isomorphic(g, h), isomorphic(h, g)
    assert gh and hg and g.rename(gh) == h and h.rename(hg) == g
    hk = isomorphic(h, k)
    assert g.rename({v: hk[gh[v]] for v in g.ports}) == k
    assert canonical_key(g) == canonical_key(h) == canonical_key(k)


def test_canonical_order_lists_every_vertex():
    g = canonical_sphere(3)
    assert sorted(canonical(g).order) == sorted(g.ports)


# -- consistency and union ---------------------------------------------------------

def test_consistent_with_itself_and_disjoint():
    g = canonical_sphere(2)
    assert consistent(g, g)
    assert consistent(g, canonical_sphere(2, list("abcd")))


def test_edge_versus_semi_edge_is_inconsistent():
    g = two_triangles()
    h = simplex(2, "u")
    assert not consistent(g, h)
    assert consistent(g, h, strict=False)


def test_union_of_one():
    g = canonical_sphere(2)
    assert union([g]) == g


def test_union_of_overlapping_halves_of_sphere():
    g = canonical_sphere(2)
    # induced halves sharing only two vertices would both miss the edge
    # between their private vertices; here the first half also carries v3
    # as the far end of v0's edge
    a = g.induced({"v0", "v1", "v2", "v3"})
    a = Graph(2, a.ports, {k: e for k, e in a.edges.items() if "v0" in (k[0], e[0]) or
                           {k[0], e[0]} == {"v1", "v2"}}, {})
    b = g.induced({"v1", "v2", "v3"})
    assert not consistent(a, b) and consistent(a, b, strict=False)
    u = union([a, b])
    assert validate(u) == []
    assert isomorphic(u, g) is not None and u == g


def test_union_rejects_conflicts():
    g = two_triangles()
    h = Graph.build(2, {"u": {0, 1, 2}, "v": {0, 1, 2}}, [("u", 0, (2, 1, 0, 3), "v", 2)])
    with pytest.raises(InconsistentGraphs) as exc:
        union([g, h])
    assert exc.value.vertex == "u" and exc.value.port == 0
    with pytest.raises(InconsistentGraphs):
        union([g, simplex(2, "u")], strict=True)
    with pytest.raises(InconsistentGraphs):
        union([simplex(2, "u"), simplex(2, "u", {0, 1, 3})])


@given(graphs(max_steps=7), st.integers(0, 2**32 - 1))
def test_union_of_disks_is_associative_and_commutative(g, seed):
    rng = random.Random(seed)
    vs = sorted(g.ports)
    parts = [disk(g, rng.choice(vs), rng.randrange(2)).graph for _ in range(3)]
    a, b, c = parts
    left = union([union([a, b]), c])
    right = union([a, union([b, c])])
    assert left == right == union([c, b, a])
    assert validate(left) == []
    whole = union([disk(g, v, 0).graph for v in vs])
    assert whole == g
