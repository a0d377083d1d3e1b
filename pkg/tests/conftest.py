import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from functidist.graph import make_graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(0, v - 1)), v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return make_graph(n, edges | set(extra))


@st.composite
def graph_and_coloring(draw, max_n=8, max_colors=3):
    G = draw(connected_graphs(max_n=max_n))
    f = draw(st.lists(st.integers(1, max_colors), min_size=G.n, max_size=G.n))
    return G, tuple(f)


@st.composite
def graph_and_function(draw, min_n=2, max_n=5):
    G = draw(connected_graphs(min_n=min_n, max_n=max_n))
    g = draw(st.lists(st.integers(0, G.n - 1), min_size=G.n, max_size=G.n))
    return G, tuple(g)


@pytest.fixture
def rng():
    return random.Random(20261014)
