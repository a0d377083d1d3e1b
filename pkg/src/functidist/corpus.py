"""Small graph corpora used by the sweeps and tests."""

from __future__ import annotations

from functools import lru_cache

import networkx as nx

from .graph import Graph, complete, cycle, join, make_graph, path, star

# smallest connected asymmetric graph in atlas order; checked exhaustively in tests
RIGID6 = make_graph(6, [(0, 2), (1, 2), (1, 3), (1, 4), (2, 4), (3, 5)])

# connected graphs on n vertices up to isomorphism, n = 1..7
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class, from the networkx atlas."""
    if not 1 <= n <= 7:
        raise ValueError("the graph atlas covers 1..7 vertices")
    out = []
    for H in nx.graph_atlas_g():
        if H.number_of_nodes() == n and nx.is_connected(H):
            out.append(make_graph(n, H.edges()))
    return tuple(out)


def connected_up_to(max_n: int, min_n: int = 1) -> tuple[Graph, ...]:
    return tuple(G for n in range(min_n, max_n + 1) for G in connected_graphs(n))


def named_graphs() -> dict[str, Graph]:
    return {
        "P3": path(3),
        "P4": path(4),
        "C5": cycle(5),
        "C6": cycle(6),
        "K4": complete(4),
        "K5": complete(5),
        "K1,3": star(3),
        "K1,4": star(4),
        "P3+P3": join(path(3), path(3)),
        "rigid6": RIGID6,
    }


def fixture_functigraphs() -> list:
    """Twenty small functigraphs mixing constant, bijective and uneven maps."""
    from .functigraph import build_functigraph

    bases = [
        (path(2), [(0, 0), (0, 1), (1, 0)]),
        (path(3), [(0, 0, 2), (0, 0, 1), (1, 0, 1), (0, 1, 2), (2, 1, 0)]),
        (path(4), [(0, 0, 0, 0), (0, 1, 2, 3), (3, 3, 0, 1)]),
        (cycle(4), [(0, 1, 2, 3), (0, 0, 2, 2), (1, 2, 3, 0)]),
        (cycle(5), [(0, 0, 0, 0, 0), (0, 2, 4, 1, 3)]),
        (complete(4), [(0, 1, 2, 3), (0, 0, 1, 1)]),
        (star(3), [(1, 0, 0, 0), (0, 1, 2, 3)]),
    ]
    return [build_functigraph(G, g) for G, maps in bases for g in maps]
