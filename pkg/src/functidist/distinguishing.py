"""Exact distinguishing numbers.

:func:`dist_exact` starts at a provable lower bound and runs, for each color
count ``t``, a depth-first search over colorings in lex order (vertex 0
most significant). A node assigning colors to vertices ``0..k-1`` is cut
when some non-identity automorphism preserves those colors while fixing
every later vertex, since then no completion can be distinguishing. Two
more cuts keep only one coloring per symmetry class: colors first appear in
increasing order, and optionally a coloring is dropped when a known
automorphism maps it to a lex-smaller one. Both keep the lex-least
distinguishing coloring, so the witness is stable.

:func:`dist_oracle` is the independent check: every automorphism is listed
by exhaustive extension search and every coloring is tested against all of
them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ._backend import kernels
from .automorphism import Coloring, all_automorphisms, automorphism_group, is_distinguishing
from .constructions import psi
from .graph import Graph, is_connected, twin_partition, twin_stems

log = logging.getLogger(__name__)


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 2_000_000
    max_n: int = 400


@dataclass
class SearchStats:
    nodes: int = 0
    colorings_tested: int = 0

    def to_json(self) -> dict:
        return {"nodes": self.nodes, "colorings_tested": self.colorings_tested}


@dataclass(frozen=True)
class DistResult:
    """Outcome of :func:`dist_exact`; ``value`` is ``None`` when unknown."""

    value: int | None
    witness: Coloring | None
    lower_bound: int
    lower_bound_source: str
    upper_bound: int
    certificate: str  # "lower-bound" | "exhausted-search" | "unknown"
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def exact(self) -> bool:
        return self.value is not None

    def to_json(self) -> dict:
        return {
            "value": self.value if self.value is not None else "unknown",
            "witness": None if self.witness is None else self.witness.to_json(),
            "lower_bound": self.lower_bound,
            "source": self.lower_bound_source,
            "upper_bound": self.upper_bound,
            "certificate": self.certificate,
            "stats": self.stats.to_json(),
        }


def dist_lower_bound(G: Graph) -> tuple[int, str]:
    """Largest twin set, or ``psi`` of the largest twin-stem family, or 1."""
    twins = twin_partition(G).max_twin_size
    stems = max((psi(r.count) for r in twin_stems(G)), default=1)
    if twins == 1 and stems == 1:
        return 1, "trivial"
    if twins >= stems:
        return twins, "twin-set"
    return stems, "stem-count"


def _small_symmetries(G: Graph) -> list[tuple[int, ...]]:
    """Twin transpositions and stem swaps, as support tuples of involutions."""
    pool = []
    for cls in twin_partition(G).classes:
        vs = cls.vertices
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                pool.append(((vs[a], vs[b]),))
    for rep in twin_stems(G):
        st = rep.stems
        for a in range(len(st)):
            for b in range(a + 1, len(st)):
                pool.append(((st[a][0], st[b][0]), (st[a][1], st[b][1])))
    return pool


class _ColoringSearch:
    def __init__(self, G: Graph, t: int, generators, budget: SearchBudget, stats: SearchStats):
        self.G = G
        self.n = G.n
        self.t = t
        self.budget = budget
        self.stats = stats
        self.col = [0] * G.n
        gens = []
        for g in generators:
            gens.append(g.images)
            gens.append(g.inverse().images)
        self.gens = gens
        # index involutions by the largest vertex they touch
        self.by_last: dict[int, list] = {}
        for swaps in _small_symmetries(G):
            last = max(max(pair) for pair in swaps)
            self.by_last.setdefault(last, []).append(swaps)

    def run(self) -> Coloring | None:
        found = self._extend(0, 0)
        return None if found is None else Coloring(tuple(found))

    def _extend(self, k: int, used: int):
        n, col = self.n, self.col
        if k == n:
            return list(col)
        for c in range(1, min(used + 1, self.t) + 1):
            self.stats.nodes += 1
            if self.stats.nodes > self.budget.max_nodes:
                raise BudgetExceeded(f"search exceeded {self.budget.max_nodes} nodes")
            col[k] = c
            if self._cut(k + 1):
                continue
            found = self._extend(k + 1, max(used, c))
            if found is not None:
                return found
        col[k] = 0
        return None

    def _cut(self, k: int) -> bool:
        col = self.col
        for swaps in self.by_last.get(k - 1, ()):
            if all(col[a] == col[b] for a, b in swaps):
                return True
        for g in self.gens:
            for v in range(k):
                w = g[v]
                if w >= k:
                    break
                if col[w] != col[v]:
                    if col[w] < col[v]:
                        return True
                    break
        if k == self.n:
            self.stats.colorings_tested += 1
            return not is_distinguishing(self.G, col)
        partial = col[:k] + [self.t + 1 + v for v in range(k, self.n)]
        return not is_distinguishing(self.G, partial)


def _require_connected(G: Graph) -> None:
    if not is_connected(G):
        raise ValueError("distinguishing-number solvers need a connected graph")


def dist_exact(
    G: Graph,
    budget: SearchBudget | None = None,
    orbit_pruning: bool = True,
    start: int | None = None,
) -> DistResult:
    """Exact Dist(G) with the lex-least witness.

    ``start`` overrides the first color count tried and must itself be a
    proven lower bound. On budget exhaustion the result is ``unknown``,
    with the best bound proved so far and the all-distinct witness.
    """
    budget = budget or SearchBudget()
    _require_connected(G)
    if G.n > budget.max_n:
        raise BudgetExceeded(f"graph has {G.n} vertices, cap is {budget.max_n}")
    lb, source = dist_lower_bound(G)
    if start is not None:
        lb = max(lb, start)
    gens = automorphism_group(G).generators if orbit_pruning else ()
    stats = SearchStats()
    t = lb
    try:
        while True:
            witness = _ColoringSearch(G, t, gens, budget, stats).run()
            if witness is not None:
                cert = "lower-bound" if t == lb else "exhausted-search"
                return DistResult(t, witness, lb, source, t, cert, stats)
            log.debug("no distinguishing %d-coloring, trying %d", t, t + 1)
            t += 1
    except BudgetExceeded:
        trivial = Coloring(tuple(range(1, G.n + 1)))
        return DistResult(None, trivial, t, source, G.n, "unknown", stats)


def dist_oracle(
    G: Graph,
    max_colorings: int = 50_000_000,
    max_group_order: int = 10**6,
    with_witness: bool = False,
):
    """Dist(G) by trying every coloring against every automorphism.

    With ``with_witness`` returns ``(value, lex-least witness)``.
    """
    _require_connected(G)
    perms = [p for p in all_automorphisms(G, max_order=max_group_order) if not p.is_identity()]
    perms.sort(key=lambda p: (len(p.support()), p.images))
    table = [p.images for p in perms]
    for t in range(1, G.n + 1):
        found, _ = kernels.first_distinguishing(G.n, table, t, max_colorings)
        if found is not None:
            return (t, Coloring(found)) if with_witness else t
    raise AssertionError("the all-distinct coloring is always distinguishing")


def verify_witness(G: Graph, f, claimed: int) -> bool:
    """``f`` uses at most ``claimed`` colors and is distinguishing."""
    f = f if isinstance(f, Coloring) else Coloring(tuple(f))
    if len(f) != G.n:
        return False
    return f.num_used <= claimed and is_distinguishing(G, f)


def swap_certificate(G: Graph, f, max_group_order: int = 10**6) -> int | None:
    """Dist(G) certified without refinement, or ``None``.

    The witness ``f`` must be fixed only by the identity under exhaustive
    extension search. The matching lower bound comes from twin transpositions
    and stem swaps, each checked edge by edge: a twin class of size ``r``
    needs ``r`` colors and ``c`` swappable stems need ``psi(c)`` colors,
    since swapped stems must differ in their color pair.
    """
    _require_connected(G)
    f = f if isinstance(f, Coloring) else Coloring(tuple(f))
    try:
        all_automorphisms(G, coloring=f, max_order=1)
    except OverflowError:
        return None
    kg = G.kernel
    floor = 1
    for swaps in _small_symmetries(G):
        perm = list(range(G.n))
        for a, b in swaps:
            perm[a], perm[b] = b, a
        if not kernels.is_automorphism(kg, tuple(perm)):
            return None
    floor = max(floor, twin_partition(G).max_twin_size)
    floor = max([floor] + [psi(r.count) for r in twin_stems(G)])
    if floor == 1:
        try:
            all_automorphisms(G, max_order=1)
        except OverflowError:
            floor = 2
    return f.num_used if floor == f.num_used else None
