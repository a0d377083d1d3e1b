import itertools
import json

import pytest
from hypothesis import given

from functidist.functigraph import (
    VertexFunction,
    build_functigraph,
    constant_function,
    enumerate_functions,
    fiber_stats,
    function_from_fibers,
    functigraph_from_json,
    identity_function,
    integer_partitions,
    load_functigraph,
    project_a,
)
from functidist.graph import GraphError, complete, disjoint_union, is_connected, path

from conftest import graph_and_function


def test_constant_p3():
    F = build_functigraph(path(3), constant_function(3))
    assert F.composite.n == 6 and F.composite.num_edges == 7
    assert F.stats.s == 1


def test_sharpness_instance_stats():
    st = VertexFunction((0, 0, 2)).stats
    assert (st.s, st.l, st.m) == (2, 2, 1)


def test_bijective_k4():
    F = build_functigraph(complete(4), identity_function(4))
    st = F.stats
    assert (st.s, st.l, st.m) == (4, 1, 4)
    assert F.composite.num_edges == 16


def test_layout():
    F = build_functigraph(path(3), (2, 0, 1))
    assert F.a(1) == 1 and F.b(1) == 4
    for u in range(3):
        assert F.composite.has_edge(u, 3 + (2, 0, 1)[u])
    assert project_a(F) == path(3)


@pytest.mark.parametrize(
    "G, g",
    [(path(3), (0, 1)), (path(1), (0,)), (disjoint_union(path(2), path(2)), (0, 0, 0, 0))],
)
def test_build_errors(G, g):
    with pytest.raises(ValueError):
        build_functigraph(G, g)


def test_vertex_function_range():
    with pytest.raises(ValueError):
        VertexFunction((0, 3, 1))


@given(graph_and_function(max_n=6))
def test_composite_shape(case):
    G, g = case
    F = build_functigraph(G, g)
    assert F.composite.num_edges == 2 * G.num_edges + G.n
    assert is_connected(F.composite)
    st = F.stats
    assert sum(st.fibers) == G.n and st.s == len(set(g))
    if 1 < st.s <= G.n - 1:
        assert 2 <= st.l <= G.n - st.s + 1
        assert 0 <= st.m <= st.s - 1


def test_partitions_and_fiber_classes():
    assert [p for p in integer_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    # p(n) for n = 1..8
    assert [sum(1 for _ in integer_partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    for p in integer_partitions(6):
        assert fiber_stats(function_from_fibers(p)).fibers == p


def test_enumerate_all_is_lex():
    maps = [g.images for g in enumerate_functions(3)]
    assert maps == list(itertools.product(range(3), repeat=3))
    with pytest.raises(OverflowError):
        next(enumerate_functions(9, cap=1000))
    with pytest.raises(ValueError):
        next(enumerate_functions(3, "bogus"))


def test_aut_classes_cover_all_maps():
    from functidist.automorphism import all_automorphisms

    for G in (path(3), complete(3), path(4)):
        reps = [g.images for g in enumerate_functions(G.n, "aut-classes", graph=G)]
        auts = [p.images for p in all_automorphisms(G)]
        covered = set()
        for r in reps:
            for s in auts:
                sinv = [0] * G.n
                for v, w in enumerate(s):
                    sinv[w] = v
                for t in auts:
                    covered.add(tuple(t[r[sinv[v]]] for v in range(G.n)))
        assert covered == set(itertools.product(range(G.n), repeat=G.n))
        assert reps == sorted(reps)
    # K3 maps up to S3 x S3 are classified by fiber shape
    assert len(list(enumerate_functions(3, "aut-classes", graph=complete(3)))) == 3


@given(graph_and_function(max_n=6))
def test_spec_round_trip(case):
    G, g = case
    F = build_functigraph(G, g)
    again = functigraph_from_json(json.loads(json.dumps(F.to_json())))
    assert again.composite == F.composite and again.g == F.g


@pytest.mark.parametrize(
    "payload",
    [
        {"graph": {"n": 3, "edges": [[0, 1], [1, 2]]}},
        {"graph": {"n": 3, "edges": [[0, 1], [1, 2]]}, "g": [0, 1]},
        {"graph": {"n": 3, "edges": [[0, 1], [1, 2]]}, "g": [0, 1, "2"]},
        {"graph": {"n": 3, "edges": [[0, 1], [1, 2]]}, "g": [0, 1, 7]},
        {"graph": {"n": 4, "edges": [[0, 1], [2, 3]]}, "g": [0, 0, 0, 0]},
    ],
)
def test_spec_errors(payload):
    with pytest.raises(GraphError):
        functigraph_from_json(payload)


def test_load_functigraph(tmp_path):
    p = tmp_path / "s.json"
    p.write_text("{\n")
    with pytest.raises(GraphError, match="line"):
        load_functigraph(p)
    p.write_text(json.dumps({"graph": path(3).to_json(), "g": [0, 0, 2]}))
    assert load_functigraph(p).composite.n == 6
