"""Threshold functions and the explicit graph/function families.

Stem families share one layout. For ``p`` stems on a path of ``p``
vertices: path vertex ``x_i`` is ``i-1``, stem vertex ``u_i`` is
``p + 2(i-1)`` and its tip ``u'_i`` is ``p + 2(i-1) + 1`` (``i = 1..p``).
In the functigraph the B-copies are ``y_i``, ``v_i``, ``v'_i`` at the same
offsets plus ``3p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .automorphism import Coloring
from .functigraph import Functigraph, VertexFunction, build_functigraph
from .graph import Graph, complete, make_graph


def psi(m: int) -> int:
    """Least ``k >= 2`` with ``m <= 2*C(k,2) + k``, i.e. ``m <= k*k``."""
    if m < 2:
        raise ValueError(f"psi is defined for m >= 2, got {m}")
    k = isqrt(m - 1) + 1
    return max(k, 2)


def phi(i: int) -> int:
    """Least ``k >= 2`` with ``i <= C(k,2)``."""
    if i < 1:
        raise ValueError(f"phi is defined for i >= 1, got {i}")
    k = (1 + isqrt(8 * i - 7)) // 2 + 1
    while k > 2 and (k - 1) * (k - 2) // 2 >= i:
        k -= 1
    while k * (k - 1) // 2 < i:
        k += 1
    return k


def psi_scan(m: int) -> int:
    k = 2
    while m > 2 * (k * (k - 1) // 2) + k:
        k += 1
    return k


def phi_scan(i: int) -> int:
    k = 2
    while i > k * (k - 1) // 2:
        k += 1
    return k


def stem_pair(i: int, k: int) -> tuple[int, int]:
    """Colors of ``(u_i, u'_i)``: block index of ``i`` then ``i`` mod ``k`` (0 -> k)."""
    first = (i - 1) // k + 1
    second = i % k or k
    return first, second


def stem_labeling(t: int, k: int) -> Coloring:
    """Coloring of the spider with ``t`` length-2 legs.

    Vertex 0 is the center (color ``k``); ``u_i`` is ``2i-1`` and ``u'_i``
    is ``2i``.
    """
    if t < 2 or k != psi(t):
        raise ValueError(f"stem labeling needs k = psi(t); got t={t}, k={k}")
    colors = [k]
    for i in range(1, t + 1):
        colors += stem_pair(i, k)
    return Coloring(tuple(colors))


def spider(t: int, tail: int = 0) -> Graph:
    """Center 0 with ``t`` legs of length 2, plus an optional path of ``tail`` extra vertices."""
    edges = []
    for i in range(1, t + 1):
        edges += [(0, 2 * i - 1), (2 * i - 1, 2 * i)]
    prev = 0
    for j in range(tail):
        v = 2 * t + 1 + j
        edges.append((prev, v))
        prev = v
    return make_graph(2 * t + 1 + tail, edges)


# -- stem families -----------------------------------------------------------------


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    parameter: int
    graph: Graph
    g: VertexFunction
    predicted_dist_graph: int
    predicted_dist_functigraph: int
    coloring: Coloring | None = None
    counts: dict = field(default_factory=dict)

    @property
    def functigraph(self) -> Functigraph:
        return build_functigraph(self.graph, self.g)

    def predictions(self) -> dict:
        return {
            "family": self.family,
            "parameter": self.parameter,
            "dist_graph": self.predicted_dist_graph,
            "dist_functigraph": self.predicted_dist_functigraph,
            "counts": dict(self.counts),
            "coloring": None if self.coloring is None else self.coloring.to_json(),
        }


def stem_path_graph(p: int) -> Graph:
    """Path ``x_1..x_p`` with ``p`` length-2 stems hanging from ``x_1``."""
    edges = [(i, i + 1) for i in range(p - 1)]
    for i in range(p):
        u = p + 2 * i
        edges += [(0, u), (u, u + 1)]
    return make_graph(3 * p, edges)


def _stem_map(p: int, to_stem: int) -> VertexFunction:
    """Stem vertices of stem ``i`` go to ``y_i``; ``x_i`` goes to ``v_i`` for
    ``i <= to_stem`` and to ``y_i`` otherwise (B-local indices)."""
    images = [0] * (3 * p)
    for i in range(p):
        u = p + 2 * i
        images[u] = images[u + 1] = i
        images[i] = p + 2 * i if i < to_stem else i
    return VertexFunction(tuple(images))


def _family_counts(p: int) -> dict:
    return {"path": p, "stems": p, "vertices": 3 * p, "edges": 3 * p - 1}


def stems_equal(t: int) -> ConstructionSpec:
    """Dist(G) = t = Dist(F_G): ``(t-1)^2 + 1`` stems, every fiber lands on the B path."""
    if t < 2:
        raise ValueError(f"stems-equal needs t >= 2, got {t}")
    p = (t - 1) ** 2 + 1
    G = stem_path_graph(p)
    colors = [t] * p
    for i in range(1, p + 1):
        if t == 2:
            colors += stem_pair(i, 2)
        elif i == p:
            colors += [t, t]
        else:
            colors += [(i - 1) // (t - 1) + 1, i % (t - 1) or t - 1]
    return ConstructionSpec(
        "stems-equal", t, G, _stem_map(p, 0), t, t, Coloring(tuple(colors)), _family_counts(p)
    )


def _label_path_and_stems(p: int, k: int) -> Coloring:
    colors = [k] * p
    for i in range(1, p + 1):
        colors += stem_pair(i, k)
    return Coloring(tuple(colors))


def stems_sum(t: int) -> ConstructionSpec:
    """Dist(G) + Dist(F_G) = t with ``(t-3)^2 + 1`` stems."""
    if t < 4:
        raise ValueError(f"stems-sum needs t >= 4, got {t}")
    p = (t - 3) ** 2 + 1
    G = stem_path_graph(p)
    k = t - 2
    return ConstructionSpec(
        "stems-sum", t, G, _stem_map(p, p - 2), k, 2, _label_path_and_stems(p, k), _family_counts(p)
    )


def stems_difference(t: int) -> ConstructionSpec:
    """Dist(G) - Dist(F_G) = t with ``4(t-1)^2 + 1`` stems; x_i -> v_i up to ``3t^2 - 4t``."""
    if t < 3:
        raise ValueError(f"stems-difference needs t >= 3, got {t}")
    p = 4 * (t - 1) ** 2 + 1
    G = stem_path_graph(p)
    k = 2 * t - 1
    counts = _family_counts(p) | {"free_b_stems": p - (3 * t * t - 4 * t)}
    return ConstructionSpec(
        "stems-difference",
        t,
        G,
        _stem_map(p, 3 * t * t - 4 * t),
        k,
        t - 1,
        _label_path_and_stems(p, k),
        counts,
    )


FAMILIES = {
    "stems-equal": (stems_equal, 2),
    "stems-sum": (stems_sum, 4),
    "stems-difference": (stems_difference, 3),
}


def construct(family: str, parameter: int) -> ConstructionSpec:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    builder, minimum = FAMILIES[family]
    if parameter < minimum:
        raise ValueError(f"family {family!r} needs t >= {minimum}, got {parameter}")
    return builder(parameter)


# -- K_n minus a matching ---------------------------------------------------------


def edge_deleted_complete(n: int, i: int) -> Graph:
    """K_n without the disjoint edges ``(0,1), (2,3), ..., (2i-2, 2i-1)``.

    Vertices ``0..2i-1`` form ``i`` non-adjacent twin pairs and
    ``2i..n-1`` stay saturated.
    """
    if n < 5 or not 1 <= i <= n // 2:
        raise ValueError(f"need n >= 5 and 1 <= i <= n//2, got n={n}, i={i}")
    removed = {(2 * j, 2 * j + 1) for j in range(i)}
    return Graph(n, tuple(e for e in complete(n).edges if e not in removed))
