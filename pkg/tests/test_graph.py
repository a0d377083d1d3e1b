import json

import pytest
from hypothesis import given

from functidist.graph import (
    Graph,
    GraphError,
    complete,
    cycle,
    disjoint_union,
    dump_graph,
    family,
    graph_from_json,
    induced,
    is_connected,
    join,
    load_graph,
    make_graph,
    path,
    relabel,
    star,
    to_dot,
    twin_partition,
    twin_stems,
)

from conftest import connected_graphs


def test_edges_are_canonical():
    G = make_graph(3, [(2, 1), (1, 0), (0, 1)])
    assert G.edges == ((0, 1), (1, 2))
    assert G == make_graph(3, [(0, 1), (1, 2)])


@pytest.mark.parametrize("bad", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_bad_edges_rejected(bad):
    with pytest.raises(GraphError):
        make_graph(3, bad)


def test_family_sizes():
    assert family("path", 5).num_edges == 4
    assert family("cycle", 6).num_edges == 6
    assert family("complete", 5).num_edges == 10
    S = family("star", 5)
    assert S.n == 5 and S.degree(0) == 4
    assert star(3) == family("star", 4)
    with pytest.raises(GraphError):
        family("cycle", 2)
    with pytest.raises(GraphError):
        family("wheel", 5)


def test_twin_classes_of_small_families():
    # non-adjacent twins: the leaves of a star
    tp = twin_partition(star(4))
    assert tp.max_twin_size == 4
    assert tp.class_of(1).kind == "non-adjacent"
    # adjacent twins: all of K_n
    tp = twin_partition(complete(5))
    assert tp.max_twin_size == 5 and tp.class_of(0).kind == "adjacent"
    # P3 ends share their only neighbor
    assert twin_partition(path(3)).max_twin_size == 2
    assert twin_partition(path(5)).max_twin_size == 1
    assert twin_partition(cycle(4)).max_twin_size == 2


@given(connected_graphs(max_n=8))
def test_twin_partition_matches_definition(G):
    tp = twin_partition(G)
    owner = {}
    for cls in tp.classes:
        for v in cls.vertices:
            assert v not in owner
            owner[v] = cls
    assert set(owner) == set(range(G.n))
    for u in range(G.n):
        for v in range(u + 1, G.n):
            twins = G.closed_neighbors(u) == G.closed_neighbors(v) or G.neighbors(u) == G.neighbors(v)
            if owner[u] is owner[v]:
                assert twins


def test_twin_stems_spider():
    G = make_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    (rep,) = twin_stems(G)
    assert rep.major == 0 and rep.count == 3
    assert rep.stems == ((1, 2), (3, 4), (5, 6))
    # a single stem is not reported
    assert twin_stems(path(5)) == []


def test_join_and_union():
    J = join(path(2), path(3))
    assert J.n == 5 and J.num_edges == 1 + 2 + 6
    U = disjoint_union(path(2), path(2))
    assert not is_connected(U) and U.num_edges == 2
    assert is_connected(J)


def test_induced_and_relabel():
    H, m = induced(cycle(5), [0, 1, 2])
    assert H == path(3) and m == {0: 0, 1: 1, 2: 2}
    R = relabel(path(3), [1, 0, 2])
    assert R.edges == ((0, 1), (0, 2))
    with pytest.raises(GraphError):
        relabel(path(3), [0, 0, 1])


@given(connected_graphs(max_n=9))
def test_json_round_trip(G):
    assert graph_from_json(json.loads(dump_graph(G))) == G


@pytest.mark.parametrize(
    "payload",
    [
        [],
        {"n": 3},
        {"n": 3, "edges": [[0, 1]], "extra": 1},
        {"n": "3", "edges": []},
        {"n": 3, "edges": [[1, 0]]},
        {"n": 3, "edges": [[0, 5]]},
        {"n": 3, "edges": "none"},
    ],
)
def test_graph_json_rejects(payload):
    with pytest.raises(GraphError):
        graph_from_json(payload)


def test_load_graph_reports_line(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"n": 3,\n "edges": [[0,1],\n')
    with pytest.raises(GraphError, match="line"):
        load_graph(p)
    p.write_text(dump_graph(path(4)))
    assert load_graph(p) == path(4)


def test_dot_export():
    text = to_dot(path(3), coloring=[1, 2, 1])
    assert text.startswith("graph G {")
    assert '1 [label="1", color="2"];' in text
    assert text.count("--") == 2


def test_graph_needs_vertices():
    with pytest.raises(GraphError):
        Graph(0, ())
