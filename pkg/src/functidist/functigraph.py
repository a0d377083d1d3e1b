"""Functigraphs: two copies of a graph joined along a vertex map.

Index layout of the composite graph: copy A is ``0..n-1``, copy B is
``n..2n-1`` and B-vertex ``n + k`` is the copy of A-vertex ``k``.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .graph import Graph, GraphError, graph_from_json, is_connected


@dataclass(frozen=True)
class FiberStats:
    s: int
    l: int  # noqa: E741
    m: int
    fibers: tuple[int, ...]  # preimage sizes, largest first

    @property
    def n(self) -> int:
        return sum(self.fibers)

    def in_bounded_range(self) -> bool:
        """Whether ``1 < s <= n-1``, the range where ``l`` and ``m`` are bounded."""
        return 1 < self.s <= self.n - 1

    def to_json(self) -> dict:
        return {"s": self.s, "l": self.l, "m": self.m, "fibers": list(self.fibers)}


@dataclass(frozen=True)
class VertexFunction:
    """Total map from copy-A vertices to copy-B vertices, both indexed ``0..n-1``."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        n = len(imgs)
        if n == 0:
            raise ValueError("a vertex function needs a nonempty domain")
        for u, x in enumerate(imgs):
            if not 0 <= x < n:
                raise ValueError(f"image of {u} is {x}, outside 0..{n - 1}")
        object.__setattr__(self, "images", imgs)

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def image_set(self) -> frozenset[int]:
        return frozenset(self.images)

    def __call__(self, u: int) -> int:
        return self.images[u]

    def is_constant(self) -> bool:
        return len(self.image_set) == 1

    def is_bijective(self) -> bool:
        return len(self.image_set) == self.n

    @cached_property
    def stats(self) -> FiberStats:
        return fiber_stats(self)


def fiber_stats(g: VertexFunction) -> FiberStats:
    counts = Counter(g.images)
    fibers = tuple(sorted(counts.values(), reverse=True))
    s = len(counts)
    stats = FiberStats(s=s, l=fibers[0], m=sum(1 for x in fibers if x == 1), fibers=fibers)
    if stats.in_bounded_range():
        n = g.n
        assert 2 <= stats.l <= n - s + 1, stats
        assert 0 <= stats.m <= s - 1, stats
    return stats


@dataclass(frozen=True)
class Functigraph:
    base: Graph
    g: VertexFunction
    composite: Graph

    @property
    def n(self) -> int:
        return self.base.n

    def a(self, k: int) -> int:
        return k

    def b(self, k: int) -> int:
        return self.base.n + k

    @property
    def stats(self) -> FiberStats:
        return self.g.stats

    def to_json(self) -> dict:
        return {"graph": self.base.to_json(), "g": list(self.g.images)}


def build_functigraph(G: Graph, g: VertexFunction | Sequence[int]) -> Functigraph:
    if not isinstance(g, VertexFunction):
        g = VertexFunction(tuple(g))
    if g.n != G.n:
        raise ValueError(f"function covers {g.n} vertices but the graph has {G.n}")
    if G.n < 2:
        raise ValueError("functigraph base must have at least 2 vertices")
    if not is_connected(G):
        raise ValueError("functigraph base must be connected")
    n = G.n
    edges = list(G.edges)
    edges += [(u + n, v + n) for u, v in G.edges]
    edges += [(u, n + g(u)) for u in range(n)]
    return Functigraph(G, g, Graph(2 * n, tuple(edges)))


def project_a(F: Functigraph) -> Graph:
    """Copy A with copy B and the cross edges removed."""
    n = F.base.n
    return Graph(n, tuple(e for e in F.composite.edges if e[1] < n))


# -- canonical functions ---------------------------------------------------------


def constant_function(n: int, target: int = 0) -> VertexFunction:
    return VertexFunction((target,) * n)


def identity_function(n: int) -> VertexFunction:
    return VertexFunction(tuple(range(n)))


def function_from_fibers(sizes: Sequence[int]) -> VertexFunction:
    """First ``sizes[0]`` vertices go to 0, the next ``sizes[1]`` to 1, and so on."""
    if not sizes or any(int(x) < 1 for x in sizes):
        raise ValueError(f"fiber sizes must be positive, got {list(sizes)}")
    images: list[int] = []
    for target, size in enumerate(sizes):
        images += [target] * int(size)
    return VertexFunction(tuple(images))


def integer_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` with non-increasing parts, in reverse lex order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def enumerate_functions(
    n: int,
    mode: str = "all",
    cap: int = 10**6,
    graph: Graph | None = None,
) -> Iterator[VertexFunction]:
    """Stream the functions on ``n`` vertices.

    ``all`` yields every total function in lex order. ``fiber-classes`` yields
    one :func:`function_from_fibers` map per partition of ``n``. ``aut-classes``
    yields the lex-least map of every orbit under ``g -> tau g sigma^-1`` for
    ``sigma, tau`` in Aut(graph); maps in one orbit give isomorphic
    functigraphs.
    """
    if mode == "all":
        if n**n > cap:
            raise OverflowError(f"{n}^{n} functions exceed the cap {cap}")
        for images in itertools.product(range(n), repeat=n):
            yield VertexFunction(images)
    elif mode == "fiber-classes":
        for p in integer_partitions(n):
            yield function_from_fibers(p)
    elif mode == "aut-classes":
        if graph is None or graph.n != n:
            raise ValueError("aut-classes mode needs the base graph")
        if n**n > cap:
            raise OverflowError(f"{n}^{n} functions exceed the cap {cap}")
        yield from _aut_class_representatives(graph)
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")


def _aut_class_representatives(G: Graph) -> Iterator[VertexFunction]:
    from .automorphism import all_automorphisms

    n = G.n
    group = [p.images for p in all_automorphisms(G)]
    inverses = []
    for p in group:
        inv = [0] * n
        for v, w in enumerate(p):
            inv[w] = v
        inverses.append(inv)
    seen: set[tuple[int, ...]] = set()
    for images in itertools.product(range(n), repeat=n):
        if images in seen:
            continue
        for sinv in inverses:
            pulled = [images[sinv[v]] for v in range(n)]
            for tau in group:
                seen.add(tuple(tau[x] for x in pulled))
        yield VertexFunction(images)


# -- file format -------------------------------------------------------------------


def functigraph_from_json(data) -> Functigraph:
    """Parse ``{"graph": <graph JSON>, "g": [image per A-vertex]}``."""
    if not isinstance(data, dict) or "graph" not in data or "g" not in data:
        raise GraphError('functigraph spec needs the fields "graph" and "g"')
    G = graph_from_json(data["graph"])
    g = data["g"]
    if not isinstance(g, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in g):
        raise GraphError('field "g" must be a list of integers')
    if len(g) != G.n:
        raise GraphError(f'"g" has {len(g)} entries but the graph has {G.n} vertices')
    try:
        return build_functigraph(G, VertexFunction(tuple(g)))
    except ValueError as exc:
        raise GraphError(str(exc)) from None


def load_functigraph(path) -> Functigraph:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    return functigraph_from_json(data)
