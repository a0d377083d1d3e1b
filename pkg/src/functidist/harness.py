"""Exhaustive desk-scale checks of the functigraph results.

Each check returns a list of :class:`ClaimCheck` records, one per instance.
Verdicts are exact integer comparisons. ``out-of-budget`` marks an instance
whose solver hit a cap; sweeps never sample.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Any, Callable

from . import __version__
from .constructions import construct, edge_deleted_complete, phi, psi, spider, stem_labeling
from .corpus import RIGID6, connected_up_to, named_graphs
from .distinguishing import SearchBudget, dist_exact, dist_lower_bound, dist_oracle, swap_certificate, verify_witness
from .functigraph import (
    VertexFunction,
    build_functigraph,
    constant_function,
    enumerate_functions,
    fiber_stats,
    function_from_fibers,
    identity_function,
)
from .graph import Graph, complete, join, path, twin_partition, twin_stems

PASS, FAIL, OUT = "pass", "fail", "out-of-budget"


@dataclass(frozen=True)
class ClaimCheck:
    claim: str
    instance: str
    predicted: Any
    computed: Any
    verdict: str
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "claim": self.claim,
            "instance": self.instance,
            "predicted": self.predicted,
            "computed": self.computed,
            "verdict": self.verdict,
        }
        if self.details:
            out["details"] = self.details
        return out


@dataclass(frozen=True)
class HarnessConfig:
    sweep_max_n: int = 4
    sweep_mode: str = "all"
    constant_extra: tuple[str, ...] = ("C5", "K5", "K1,4")
    complete_all_max: int = 4
    complete_fiber_max: int = 5
    bijective_range: tuple[int, int] = (3, 6)
    matching_range: tuple[int, int] = (5, 6)
    join_corpus_max_n: int = 3
    path_join_dist: tuple[tuple[int, int], ...] = ((2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4))
    path_join_sweep: tuple[tuple[int, int], ...] = ((2, 2), (2, 3), (3, 3))
    path_join_mode: str = "all"
    spider_range: tuple[int, int] = (2, 7)
    realizations: tuple[tuple[str, int], ...] = (
        ("stems-equal", 2),
        ("stems-equal", 3),
        ("stems-sum", 4),
        ("stems-sum", 5),
        ("stems-difference", 3),
    )
    max_nodes: int = 2_000_000
    max_colorings: int = 50_000_000
    max_group_order: int = 10**6


PROFILES = {
    "ci": HarnessConfig(
        sweep_max_n=3,
        complete_all_max=3,
        complete_fiber_max=4,
        bijective_range=(3, 5),
        matching_range=(5, 5),
        path_join_dist=((2, 2), (2, 3), (3, 3), (2, 4)),
        path_join_sweep=((2, 2), (2, 3)),
        spider_range=(2, 5),
        realizations=(("stems-equal", 2), ("stems-sum", 4), ("stems-difference", 3)),
    ),
    "desk": HarnessConfig(),
    "full": HarnessConfig(
        sweep_max_n=5,
        complete_fiber_max=7,
        bijective_range=(3, 7),
        matching_range=(5, 8),
        join_corpus_max_n=4,
        path_join_sweep=((2, 2), (2, 3), (3, 3), (2, 4)),
        spider_range=(2, 10),
        realizations=HarnessConfig().realizations
        + (("stems-equal", 4), ("stems-sum", 6), ("stems-difference", 4)),
    ),
}


def config_for(profile: str = "desk", **overrides) -> HarnessConfig:
    if profile not in PROFILES:
        raise ValueError(f"unknown budget profile {profile!r}; choose from {sorted(PROFILES)}")
    return replace(PROFILES[profile], **overrides)


def _gkey(G: Graph) -> str:
    return json.dumps([G.n, [list(e) for e in G.edges]], separators=(",", ":"))


class Evaluator:
    """Cached Dist computations; ``None`` means a cap was hit."""

    def __init__(self, config: HarnessConfig):
        self.config = config
        self.budget = SearchBudget(max_nodes=config.max_nodes)
        self._exact: dict[str, int | None] = {}
        self._oracle: dict[str, int | None] = {}

    def exact(self, G: Graph) -> int | None:
        key = _gkey(G)
        if key not in self._exact:
            self._exact[key] = dist_exact(G, self.budget).value
        return self._exact[key]

    def oracle(self, G: Graph) -> int | None:
        key = _gkey(G)
        if key not in self._oracle:
            try:
                self._oracle[key] = dist_oracle(
                    G,
                    max_colorings=self.config.max_colorings,
                    max_group_order=self.config.max_group_order,
                )
            except OverflowError:
                self._oracle[key] = None
        return self._oracle[key]

    def functigraph(self, G: Graph, g: VertexFunction) -> int | None:
        return self.exact(build_functigraph(G, g).composite)


def _verdict(ok: bool | None) -> str:
    if ok is None:
        return OUT
    return PASS if ok else FAIL


def _inst(G: Graph, g: VertexFunction | None = None, **extra) -> str:
    parts = [f"G={G.n}:{[list(e) for e in G.edges]}"]
    if g is not None:
        parts.append(f"g={list(g.images)}")
    parts += [f"{k}={v}" for k, v in extra.items()]
    return " ".join(parts)


def _sweep_graphs(cfg: HarnessConfig) -> tuple[Graph, ...]:
    return connected_up_to(cfg.sweep_max_n, min_n=2)


def _functions(G: Graph, mode: str):
    return enumerate_functions(G.n, mode, graph=G)


# -- bounds ------------------------------------------------------------------------


def check_functigraph_bounds(ev: Evaluator) -> list[ClaimCheck]:
    """1 <= Dist(F_G) <= Dist(G) + 1 over the sweep, plus both sharpness fixtures."""
    cfg = ev.config
    out = []
    for G in _sweep_graphs(cfg):
        dg = ev.exact(G)
        for g in _functions(G, cfg.sweep_mode):
            d = ev.functigraph(G, g)
            ok = None if d is None or dg is None else 1 <= d <= dg + 1
            out.append(
                ClaimCheck("functigraph-bounds", _inst(G, g), f"1..{dg + 1}", d, _verdict(ok))
            )
    sharp = [
        ("lower", path(3), VertexFunction((0, 0, 2)), lambda dg: 1),
        ("lower-alt", path(3), VertexFunction((0, 0, 1)), lambda dg: 1),
        ("upper", RIGID6, identity_function(6), lambda dg: dg + 1),
    ]
    for label, G, g, want in sharp:
        dg = ev.oracle(G)
        d = ev.oracle(build_functigraph(G, g).composite)
        ok = None if d is None or dg is None else d == want(dg)
        out.append(
            ClaimCheck(
                "functigraph-bounds-sharp",
                _inst(G, g, bound=label),
                None if dg is None else want(dg),
                d,
                _verdict(ok),
                {"method": "oracle", "dist_graph": dg},
            )
        )
    return out


def _sweep_values(ev: Evaluator, G: Graph) -> list[tuple[VertexFunction, int | None]]:
    return [(g, ev.functigraph(G, g)) for g in _functions(G, ev.config.sweep_mode)]


def check_twin_set_bounds(ev: Evaluator) -> list[ClaimCheck]:
    """Largest twin set <= Dist(G); if equal, every g keeps Dist(F_G) <= it."""
    cfg = ev.config
    out = []
    graphs = [G for G in _sweep_graphs(cfg) if G.n >= 3]
    graphs += [named_graphs()[k] for k in cfg.constant_extra]
    for G in graphs:
        m = twin_partition(G).max_twin_size
        dg = ev.exact(G)
        out.append(
            ClaimCheck(
                "twin-set-bound", _inst(G), f">= {m}", dg, _verdict(None if dg is None else dg >= m)
            )
        )
    for G in graphs:
        if G.n > cfg.sweep_max_n:
            continue
        m = twin_partition(G).max_twin_size
        if ev.exact(G) != m:
            continue
        for g, d in _sweep_values(ev, G):
            out.append(
                ClaimCheck(
                    "twin-set-functigraph",
                    _inst(G, g),
                    f"<= {m}",
                    d,
                    _verdict(None if d is None else d <= m),
                )
            )
    return out


def check_constant_map(ev: Evaluator) -> list[ClaimCheck]:
    """Constant g leaves the distinguishing number unchanged."""
    cfg = ev.config
    out = []
    graphs = list(_sweep_graphs(cfg)) + [named_graphs()[k] for k in cfg.constant_extra]
    for G in graphs:
        dg = ev.exact(G)
        for v in range(G.n):
            g = constant_function(G.n, v)
            d = ev.functigraph(G, g)
            ok = None if d is None or dg is None else d == dg
            out.append(ClaimCheck("constant-map", _inst(G, g), dg, d, _verdict(ok)))
    return out


def check_constant_dominates(ev: Evaluator) -> list[ClaimCheck]:
    """Dist with constant g is at least Dist with any non-constant g."""
    out = []
    for G in _sweep_graphs(ev.config):
        values = _sweep_values(ev, G)
        const = [d for g, d in values if g.is_constant()]
        other = [(d, g) for g, d in values if not g.is_constant()]
        if any(d is None for d in const) or any(d is None for d, _ in other):
            out.append(ClaimCheck("constant-map-dominates", _inst(G), None, None, OUT))
            continue
        m1 = min(const)
        m2, worst = max(other, key=lambda x: (x[0], [-y for y in x[1].images]))
        out.append(
            ClaimCheck(
                "constant-map-dominates",
                _inst(G),
                f"max non-constant <= {m1}",
                m2,
                _verdict(m1 >= m2),
                {"constant": m1, "max_non_constant_g": list(worst.images)},
            )
        )
    return out


# -- stems and realizability ------------------------------------------------------


def check_twin_stem_bound(ev: Evaluator) -> list[ClaimCheck]:
    """t length-2 stems at one major vertex need psi(t) colors; the stem
    labeling attains it on the spider."""
    lo, hi = ev.config.spider_range
    out = []
    for t in range(max(lo, 2), hi + 1):
        for tail in (0, 2):
            G = spider(t, tail)
            d = ev.exact(G)
            k = psi(t)
            out.append(
                ClaimCheck(
                    "twin-stem-bound",
                    _inst(G, stems=t, tail=tail),
                    f">= {k}",
                    d,
                    _verdict(None if d is None else d >= k),
                )
            )
        f = stem_labeling(t, psi(t))
        pairs = [(f[2 * i - 1], f[2 * i]) for i in range(1, t + 1)]
        ok = len(set(pairs)) == t and verify_witness(spider(t), f, psi(t))
        out.append(
            ClaimCheck(
                "twin-stem-labeling",
                _inst(spider(t), stems=t),
                psi(t),
                f.num_used,
                _verdict(ok),
                {"coloring": f.to_json()},
            )
        )
    return out


def _certified(ev: Evaluator, G: Graph) -> tuple[int | None, str]:
    """Oracle value when affordable, else the swap certificate on the exact
    solver's witness, else the exact solver's own exhausted search."""
    d = ev.oracle(G)
    if d is not None:
        return d, "oracle"
    res = dist_exact(G, ev.budget)
    if res.value is None:
        return None, "unknown"
    d = swap_certificate(G, res.witness, ev.config.max_group_order)
    if d is not None:
        return d, "swap-certificate"
    return res.value, f"search-{res.certificate}"


def check_realizations(ev: Evaluator) -> list[ClaimCheck]:
    out = []
    for family, t in ev.config.realizations:
        spec = construct(family, t)
        F = spec.functigraph
        p = spec.counts["stems"]
        inst = f"{family} t={t}"
        counts_ok = (
            spec.graph.n == p + 2 * p
            and spec.graph.num_edges == (p - 1) + 2 * p
            and F.composite.num_edges == 2 * spec.graph.num_edges + spec.graph.n
        )
        dg, how_g = _certified(ev, spec.graph)
        df, how_f = _certified(ev, F.composite)
        expected_free = {
            "stems-equal": p,
            "stems-sum": 2,
            "stems-difference": (t - 2) ** 2 + 1,
        }[family]
        b_root = F.b(0)
        free = [r.count for r in twin_stems(F.composite) if r.major == b_root]
        free_count = free[0] if free else 0
        witness_ok = verify_witness(spec.graph, spec.coloring, spec.predicted_dist_graph)
        lb_g = dist_lower_bound(spec.graph)[0]
        lb_f = dist_lower_bound(F.composite)[0]
        relation = {
            "stems-equal": (dg, df) == (t, t),
            "stems-sum": None if None in (dg, df) else dg + df == t,
            "stems-difference": None if None in (dg, df) else dg - df == t,
        }[family]
        ok = (
            None
            if None in (dg, df)
            else (
                relation
                and dg == spec.predicted_dist_graph
                and df == spec.predicted_dist_functigraph
                and counts_ok
                and witness_ok
                and lb_g == spec.predicted_dist_graph
                and free_count == expected_free
            )
        )
        out.append(
            ClaimCheck(
                family,
                inst,
                {"dist_graph": spec.predicted_dist_graph, "dist_functigraph": spec.predicted_dist_functigraph},
                {"dist_graph": dg, "dist_functigraph": df},
                _verdict(ok),
                {
                    "method_graph": how_g,
                    "method_functigraph": how_f,
                    "vertices": spec.graph.n,
                    "stems": p,
                    "counts_ok": counts_ok,
                    "witness_ok": witness_ok,
                    "lower_bound_graph": lb_g,
                    "lower_bound_functigraph": lb_f,
                    "free_b_stems": free_count,
                    "expected_free_b_stems": expected_free,
                },
            )
        )
    return out


# -- complete graphs -----------------------------------------------------------------


def trichotomy_case(n: int, s: int, l: int) -> str:  # noqa: E741
    if l == n - s + 1:
        return "1" if l > 2 else "2"
    if l < n - s:
        return "3"
    if l > 2:
        return "4"
    return "5a" if s <= n // 2 + 1 else "5b"


def _case_prediction(case: str, n: int, s: int, m: int) -> int | None:
    if case == "1":
        return n - s + 1
    if case in ("3", "4", "5a"):
        return n - s
    return psi(m) if m >= 2 else None


def _complete_functions(cfg: HarnessConfig):
    lo = 3
    for n in range(lo, max(cfg.complete_all_max, cfg.complete_fiber_max) + 1):
        mode = "all" if n <= cfg.complete_all_max else "fiber-classes"
        for g in enumerate_functions(n, mode):
            yield n, mode, g


def check_complete_bijective(ev: Evaluator) -> list[ClaimCheck]:
    lo, hi = ev.config.bijective_range
    out = []
    for n in range(lo, hi + 1):
        F = build_functigraph(complete(n), identity_function(n)).composite
        d = ev.oracle(F)
        out.append(
            ClaimCheck(
                "complete-bijective",
                f"K{n} g=identity",
                psi(n),
                d,
                _verdict(None if d is None else d == psi(n)),
                {"method": "oracle"},
            )
        )
    return out


def check_complete_singleton_fibers(ev: Evaluator) -> list[ClaimCheck]:
    out = []
    for n, mode, g in _complete_functions(ev.config):
        st = g.stats
        if not 2 <= st.m <= st.s:
            continue
        d = ev.functigraph(complete(n), g)
        out.append(
            ClaimCheck(
                "complete-singleton-fibers",
                f"K{n} g={list(g.images)}",
                f">= {psi(st.m)}",
                d,
                _verdict(None if d is None else d >= psi(st.m)),
                {"mode": mode, **st.to_json()},
            )
        )
    return out


def check_complete_trichotomy(ev: Evaluator) -> list[ClaimCheck]:
    out = []
    for n, mode, g in _complete_functions(ev.config):
        st = g.stats
        if not 1 < st.s <= n - 1:
            continue
        allowed = {n - st.s, n - st.s + 1}
        if st.m >= 2:
            allowed.add(psi(st.m))
        d = ev.functigraph(complete(n), g)
        case = trichotomy_case(n, st.s, st.l)
        pred = _case_prediction(case, n, st.s, st.m)
        out.append(
            ClaimCheck(
                "complete-trichotomy",
                f"K{n} g={list(g.images)}",
                sorted(allowed),
                d,
                _verdict(None if d is None else d in allowed),
                {
                    "mode": mode,
                    **st.to_json(),
                    "case": case,
                    "case_value": pred,
                    "case_value_attained": d == pred,
                },
            )
        )
    return out


def check_fiber_reduction(ev: Evaluator) -> list[ClaimCheck]:
    """For K_n, Dist(F) depends only on the fiber multiset of g."""
    out = []
    for n in range(3, ev.config.complete_all_max + 1):
        K = complete(n)
        canon: dict[tuple[int, ...], int | None] = {}
        for g in enumerate_functions(n, "all"):
            fibers = fiber_stats(g).fibers
            if fibers not in canon:
                canon[fibers] = ev.functigraph(K, function_from_fibers(fibers))
            d = ev.functigraph(K, g)
            want = canon[fibers]
            ok = None if d is None or want is None else d == want
            out.append(
                ClaimCheck(
                    "fiber-class-reduction",
                    f"K{n} g={list(g.images)}",
                    want,
                    d,
                    _verdict(ok),
                    {"fibers": list(fibers)},
                )
            )
    return out


def check_complete_minus_matching(ev: Evaluator) -> list[ClaimCheck]:
    lo, hi = ev.config.matching_range
    out = []
    for n in range(lo, hi + 1):
        for i in range(1, n // 2 + 1):
            G = edge_deleted_complete(n, i)
            want = max(n - 2 * i, phi(i))
            dg, how = _certified(ev, G)
            out.append(
                ClaimCheck(
                    "complete-minus-matching",
                    f"n={n} i={i} graph",
                    want,
                    dg,
                    _verdict(None if dg is None else dg == want),
                    {"method": how},
                )
            )
            for v in range(n):
                g = constant_function(n, v)
                d, how = _certified(ev, build_functigraph(G, g).composite)
                out.append(
                    ClaimCheck(
                        "complete-minus-matching",
                        f"n={n} i={i} g={list(g.images)}",
                        want,
                        d,
                        _verdict(None if d is None else d == want),
                        {"method": how},
                    )
                )
    return out


# -- joins ---------------------------------------------------------------------------


def check_join_lower_bound(ev: Evaluator) -> list[ClaimCheck]:
    graphs = connected_up_to(ev.config.join_corpus_max_n)
    out = []
    for G in graphs:
        for H in graphs:
            d = ev.exact(join(G, H))
            want = max(ev.exact(G), ev.exact(H))
            out.append(
                ClaimCheck(
                    "join-lower-bound",
                    f"{_inst(G)} + {_inst(H)}",
                    f">= {want}",
                    d,
                    _verdict(None if d is None else d >= want),
                )
            )
    return out


def _path_join_value(m: int, n: int) -> int:
    a, b = sorted((m, n))
    if (a, b) == (2, 2):
        return 4
    if (a, b) in ((2, 3), (3, 3)):
        return 3
    return 2


def check_path_joins(ev: Evaluator) -> list[ClaimCheck]:
    cfg = ev.config
    out = []
    for m, n in cfg.path_join_dist:
        G = join(path(m), path(n))
        d = ev.oracle(G)
        want = _path_join_value(m, n)
        out.append(
            ClaimCheck(
                "path-join-dist",
                f"P{m}+P{n}",
                want,
                d,
                _verdict(None if d is None else d == want),
                {"method": "oracle"},
            )
        )
    for m, n in cfg.path_join_sweep:
        G = join(path(m), path(n))
        worst = None
        count = 0
        fail = None
        for g in _functions(G, cfg.path_join_mode):
            if not 1 < len(g.image_set) < G.n:
                continue
            d = ev.functigraph(G, g)
            count += 1
            if d is None:
                worst = None
                fail = fail or ("out", g)
                break
            worst = d if worst is None else max(worst, d)
            if not 1 <= d <= 3 and fail is None:
                fail = ("bad", g)
        verdict = OUT if fail and fail[0] == "out" else _verdict(fail is None)
        details = {"functions": count, "mode": cfg.path_join_mode}
        if fail:
            details["first_violation_g"] = list(fail[1].images)
        out.append(
            ClaimCheck("path-join-functigraph", f"P{m}+P{n}", "1..3", worst, verdict, details)
        )
    return out


# -- registry --------------------------------------------------------------------------

SUITES: dict[str, Callable[[Evaluator], list[ClaimCheck]]] = {
    "functigraph-bounds": check_functigraph_bounds,
    "twin-set-bounds": check_twin_set_bounds,
    "constant-map": check_constant_map,
    "constant-map-dominates": check_constant_dominates,
    "twin-stem-bound": check_twin_stem_bound,
    "realizations": check_realizations,
    "complete-bijective": check_complete_bijective,
    "complete-singleton-fibers": check_complete_singleton_fibers,
    "complete-trichotomy": check_complete_trichotomy,
    "fiber-class-reduction": check_fiber_reduction,
    "complete-minus-matching": check_complete_minus_matching,
    "join-lower-bound": check_join_lower_bound,
    "path-joins": check_path_joins,
}

# every claim id a full run must produce
CLAIM_IDS = (
    "functigraph-bounds",
    "functigraph-bounds-sharp",
    "twin-set-bound",
    "twin-set-functigraph",
    "constant-map",
    "constant-map-dominates",
    "twin-stem-bound",
    "twin-stem-labeling",
    "stems-equal",
    "stems-sum",
    "stems-difference",
    "complete-bijective",
    "complete-singleton-fibers",
    "complete-trichotomy",
    "fiber-class-reduction",
    "complete-minus-matching",
    "join-lower-bound",
    "path-join-dist",
    "path-join-functigraph",
)


def run_suites(names: list[str] | None, config: HarnessConfig) -> list[ClaimCheck]:
    names = list(SUITES) if not names or names == ["all"] else names
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    ev = Evaluator(config)
    checks: list[ClaimCheck] = []
    for name in SUITES:
        if name in names:
            checks += SUITES[name](ev)
    order = {c: i for i, c in enumerate(CLAIM_IDS)}
    checks.sort(key=lambda c: order[c.claim])
    return checks


def report_lines(checks: list[ClaimCheck]) -> list[str]:
    header = {"tool": "functidist", "version": __version__, "checks": len(checks)}
    lines = [json.dumps({"header": header}, sort_keys=True)]
    lines += [json.dumps(c.to_json(), sort_keys=True) for c in checks]
    return lines


def summary_table(checks: list[ClaimCheck]) -> str:
    tally: dict[str, Counter] = {}
    for c in checks:
        tally.setdefault(c.claim, Counter())[c.verdict] += 1
    width = max([len("claim")] + [len(k) for k in tally])
    rows = [f"{'claim':<{width}}  {'pass':>6} {'fail':>6} {'budget':>6}"]
    for claim, cnt in tally.items():
        rows.append(f"{claim:<{width}}  {cnt[PASS]:>6} {cnt[FAIL]:>6} {cnt[OUT]:>6}")
    return "\n".join(rows) + "\n"


def has_failures(checks: list[ClaimCheck]) -> bool:
    return any(c.verdict == FAIL for c in checks)


def failures(checks: list[ClaimCheck]) -> list[ClaimCheck]:
    return [c for c in checks if c.verdict == FAIL]

