"""Compare the compiled and pure-Python kernels on fixed workloads.

    python benchmarks/bench_kernels.py --repeat 3
"""

from __future__ import annotations

import argparse
import time

from functidist import _pykernels
from functidist.constructions import construct
from functidist.corpus import connected_graphs
from functidist.functigraph import build_functigraph, identity_function
from functidist.graph import complete, cycle

try:
    from functidist import _kernels
except ImportError:
    _kernels = None


def _adj(G):
    return [sorted(G.neighbors(v)) for v in range(G.n)]


def workloads():
    corpus = connected_graphs(7)
    big = construct("stems-difference", 3).functigraph.composite
    k6 = build_functigraph(complete(6), identity_function(6)).composite
    k6_perms = None

    def refine_corpus(mod):
        for G in corpus:
            mod.refine(mod.KernelGraph(G.n, _adj(G)), [1] * G.n)

    def refine_big(mod):
        kg = mod.KernelGraph(big.n, _adj(big))
        for v in range(0, big.n, 4):
            col = [1] * big.n
            col[v] = 2
            mod.refine(kg, col)

    def enumerate_corpus(mod):
        for G in corpus:
            mod.enumerate_automorphisms(mod.KernelGraph(G.n, _adj(G)), [1] * G.n, 10**6)

    def enumerate_cycle(mod):
        G = cycle(60)
        mod.enumerate_automorphisms(mod.KernelGraph(G.n, _adj(G)), [1] * G.n, 10**6)

    def scan_k6(mod):
        nonlocal k6_perms
        if k6_perms is None:
            k6_perms = [
                p
                for p in _pykernels.enumerate_automorphisms(_pykernels.KernelGraph(k6.n, _adj(k6)), [1] * k6.n, 10**6)
                if list(p) != list(range(k6.n))
            ]
        for t in (1, 2, 3):
            mod.first_distinguishing(k6.n, k6_perms, t, 10**8)

    return [
        ("refine: 853 graphs on 7 vertices", refine_corpus),
        ("refine: 102-vertex functigraph", refine_big),
        ("enumerate: 853 graphs on 7 vertices", enumerate_corpus),
        ("enumerate: C60", enumerate_cycle),
        ("scan: K6 permutation graph, t<=3", scan_k6),
    ]


def best_of(fn, mod, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(mod)
        times.append(time.perf_counter() - start)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    mods = [("python", _pykernels)]
    if _kernels is not None:
        mods.append(("cython", _kernels))
    print(f"{'workload':<40}" + "".join(f"{name:>12}" for name, _ in mods) + ("     speedup" if len(mods) == 2 else ""))
    for label, fn in workloads():
        times = [best_of(fn, mod, args.repeat) for _, mod in mods]
        row = f"{label:<40}" + "".join(f"{t * 1000:>10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
