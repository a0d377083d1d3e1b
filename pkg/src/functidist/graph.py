"""Immutable simple graphs, standard families, twin and stem structure."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is stored sorted with ``u < v`` in every pair, so two graphs
    built from the same edge set compare equal regardless of input order.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be >= 1, got {self.n}")
        canon = sorted({_canon_pair(self.n, u, v) for u, v in self.edges})
        object.__setattr__(self, "edges", tuple(canon))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def kernel(self):
        """Backend-specific adjacency handle used by the hot kernels."""
        from ._backend import kernels

        return kernels.KernelGraph(self.n, [sorted(a) for a in self.adjacency])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def _canon_pair(n: int, u: int, v: int) -> tuple[int, int]:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
    if u == v:
        raise GraphError(f"self-loop ({u}, {v}) is not allowed")
    return (u, v) if u < v else (v, u)


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical graph, collapsing duplicate edges."""
    return Graph(n, tuple((int(u), int(v)) for u, v in edges))


def family(kind: str, n: int) -> Graph:
    """Standard graph family on ``0..n-1``.

    ``star`` puts the center at 0 and has ``n`` vertices in total, so
    ``family("star", 4)`` is K_{1,3}.
    """
    if kind == "path":
        _require(n >= 1, kind, n, 1)
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        _require(n >= 3, kind, n, 3)
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        _require(n >= 1, kind, n, 1)
        return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "star":
        _require(n >= 2, kind, n, 2)
        return make_graph(n, [(0, i) for i in range(1, n)])
    raise GraphError(f"unknown family {kind!r}")


def _require(ok: bool, kind: str, n: int, minimum: int) -> None:
    if not ok:
        raise GraphError(f"family {kind!r} needs n >= {minimum}, got {n}")


def path(n: int) -> Graph:
    return family("path", n)


def cycle(n: int) -> Graph:
    return family("cycle", n)


def complete(n: int) -> Graph:
    return family("complete", n)


def star(leaves: int) -> Graph:
    return family("star", leaves + 1)


# -- twins ---------------------------------------------------------------


@dataclass(frozen=True)
class TwinClass:
    vertices: tuple[int, ...]
    kind: str  # "adjacent" | "non-adjacent" | "singleton"


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[TwinClass, ...]

    @property
    def max_twin_size(self) -> int:
        return max(len(c.vertices) for c in self.classes)

    def class_of(self, v: int) -> TwinClass:
        for c in self.classes:
            if v in c.vertices:
                return c
        raise KeyError(v)


def twin_partition(G: Graph) -> TwinPartition:
    """Partition ``V(G)`` into maximal twin sets.

    Adjacent twins share closed neighborhoods, non-adjacent twins share open
    neighborhoods. A vertex can't belong to a nontrivial class of each kind
    at once, which is asserted.
    """
    by_closed: dict[frozenset[int], list[int]] = {}
    by_open: dict[frozenset[int], list[int]] = {}
    for v in G.vertices():
        by_closed.setdefault(G.closed_neighbors(v), []).append(v)
        by_open.setdefault(G.neighbors(v), []).append(v)

    owner: dict[int, TwinClass] = {}
    for groups, kind in ((by_closed, "adjacent"), (by_open, "non-adjacent")):
        for members in groups.values():
            if len(members) < 2:
                continue
            cls = TwinClass(tuple(members), kind)
            for v in members:
                assert v not in owner, f"vertex {v} is in two twin classes"
                owner[v] = cls
    for v in G.vertices():
        owner.setdefault(v, TwinClass((v,), "singleton"))

    seen: list[TwinClass] = []
    for v in G.vertices():
        if owner[v] not in seen:
            seen.append(owner[v])
    return TwinPartition(tuple(seen))


# -- stems ---------------------------------------------------------------


@dataclass(frozen=True)
class StemReport:
    """Length-2 pendant paths ``major - u - u'`` hanging off one major vertex."""

    major: int
    stems: tuple[tuple[int, int], ...]

    @property
    def count(self) -> int:
        return len(self.stems)


def twin_stems(G: Graph) -> list[StemReport]:
    """Report every major vertex carrying at least two length-2 stems."""
    reports = []
    for x in G.vertices():
        if G.degree(x) < 3:
            continue
        stems = []
        for u in sorted(G.neighbors(x)):
            if G.degree(u) != 2:
                continue
            (tip,) = G.neighbors(u) - {x}
            if G.degree(tip) == 1:
                stems.append((u, tip))
        if len(stems) >= 2:
            reports.append(StemReport(x, tuple(stems)))
    return reports


# -- subgraphs and operations ---------------------------------------------


def induced(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``S``; returns it with the old->new vertex map."""
    members = sorted(set(S))
    if not members:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    for v in members:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} is not in the graph")
    relabel = {v: i for i, v in enumerate(members)}
    edges = [(relabel[u], relabel[v]) for u, v in G.edges if u in relabel and v in relabel]
    return Graph(len(members), tuple(edges)), relabel


def join(G: Graph, H: Graph) -> Graph:
    """Join ``G + H``: H is shifted by ``G.n`` and every cross pair is joined."""
    off = G.n
    edges = list(G.edges)
    edges += [(u + off, v + off) for u, v in H.edges]
    edges += [(u, v + off) for u in range(G.n) for v in range(H.n)]
    return Graph(G.n + H.n, tuple(edges))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    off = G.n
    return Graph(G.n + H.n, G.edges + tuple((u + off, v + off) for u, v in H.edges))


def is_connected(G: Graph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in G.adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == G.n


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``G`` under the vertex bijection ``v -> perm[v]``."""
    if sorted(perm) != list(range(G.n)):
        raise GraphError("relabeling must be a permutation of the vertices")
    return Graph(G.n, tuple((perm[u], perm[v]) for u, v in G.edges))


# -- file formats ----------------------------------------------------------


def graph_from_json(data) -> Graph:
    """Parse the on-disk graph object ``{"n": int, "edges": [[u, v], ...]}``.

    Unlike :func:`make_graph`, the file format insists on ``u < v``.
    """
    if not isinstance(data, dict):
        raise GraphError("graph JSON must be an object")
    if set(data) - {"n", "edges"} or "n" not in data or "edges" not in data:
        raise GraphError('graph JSON needs exactly the fields "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphError('field "n" must be an integer')
    if not isinstance(data["edges"], list):
        raise GraphError('field "edges" must be a list')
    edges = []
    for k, e in enumerate(data["edges"]):
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise GraphError(f"edges[{k}] must be a pair of integers")
        u, v = e
        if u >= v:
            raise GraphError(f"edges[{k}] = {e} must satisfy u < v")
        edges.append((u, v))
    return make_graph(n, edges)


def load_graph(path) -> Graph:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    return graph_from_json(data)


def dump_graph(G: Graph) -> str:
    return json.dumps(G.to_json(), separators=(", ", ": "))


def to_dot(G: Graph, coloring: Sequence[int] | None = None, name: str = "G") -> str:
    """Undirected DOT text; vertex labels are indices, colors go in ``color``."""
    lines = [f"graph {name} {{"]
    for v in G.vertices():
        if coloring is None:
            lines.append(f'  {v} [label="{v}"];')
        else:
            lines.append(f'  {v} [label="{v}", color="{coloring[v]}"];')
    for u, v in G.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
