"""Pure-Python kernels; reference semantics for the compiled ``_kernels``."""

from __future__ import annotations

from collections import deque
from itertools import product

NAME = "python"


class KernelGraph:
    __slots__ = ("n", "adj", "adjset", "order")

    def __init__(self, n, adjacency):
        self.n = n
        self.adj = [list(a) for a in adjacency]
        self.adjset = [frozenset(a) for a in adjacency]
        self.order = _bfs_order(n, self.adj)


def _bfs_order(n, adj):
    order, seen = [], [False] * n
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def refine(kg, colors):
    """Coarsest equitable refinement of ``colors``, as ranks ``0..k-1``.

    A cell's rank orders first by the input color, then by the sorted
    multiset of neighbor colors, so the output is isomorphism-invariant.
    """
    adj = kg.adj
    n = kg.n
    keys = sorted(set(colors))
    rank = {c: i for i, c in enumerate(keys)}
    c = [rank[x] for x in colors]
    ncells = len(keys)
    while ncells < n:
        sigs = [(c[v], tuple(sorted([c[w] for w in adj[v]]))) for v in range(n)]
        ordered = sorted(set(sigs))
        if len(ordered) == ncells:
            break
        r = {s: i for i, s in enumerate(ordered)}
        c = [r[s] for s in sigs]
        ncells = len(ordered)
    return c


def is_automorphism(kg, perm):
    adjset = kg.adjset
    for v in range(kg.n):
        img = {perm[w] for w in kg.adj[v]}
        if img != adjset[perm[v]]:
            return False
    return True


def enumerate_automorphisms(kg, colors, limit):
    """Every color-preserving automorphism, by vertex-at-a-time extension.

    Each unmapped vertex keeps a candidate set that shrinks with every
    assignment (neighbors must go to neighbors, non-neighbors to
    non-neighbors), and the vertex with the fewest candidates is mapped next.
    Complete, so this lists exactly the permutations passing an exhaustive
    test. Raises ``OverflowError`` once more than ``limit`` are found.
    """
    n = kg.n
    nbr = [sum(1 << w for w in a) for a in kg.adj]
    deg = [len(a) for a in kg.adj]
    doms = []
    for v in range(n):
        doms.append(sum(1 << w for w in range(n) if colors[w] == colors[v] and deg[w] == deg[v]))
    if any(d == 0 for d in doms):
        return []
    img = [-1] * n
    found = []
    full = (1 << n) - 1

    def extend(doms, free):
        if not free:
            found.append(tuple(img))
            if len(found) > limit:
                raise OverflowError(f"more than {limit} automorphisms")
            return
        v = min(free, key=lambda u: (doms[u].bit_count(), u))
        rest = [u for u in free if u != v]
        bits = doms[v]
        while bits:
            low = bits & -bits
            bits ^= low
            w = low.bit_length() - 1
            yes = nbr[w]
            no = full & ~yes & ~low
            new = list(doms)
            for u in rest:
                d = doms[u] & (yes if (nbr[v] >> u) & 1 else no)
                if not d:
                    break
                new[u] = d
            else:
                img[v] = w
                extend(new, rest)
        img[v] = -1

    extend(doms, list(range(n)))
    found.sort()
    return found


def first_distinguishing(n, perms, t, max_colorings):
    """Scan colorings in ``1..t`` lexicographically (vertex 0 most significant).

    Returns ``(coloring, tested)`` for the first coloring preserved by none of
    ``perms``, or ``(None, tested)`` when there is none. Raises
    ``OverflowError`` once more than ``max_colorings`` have been tested.
    """
    tables = [(p, [v for v in range(n) if p[v] != v]) for p in perms]
    tested = 0
    for col in product(range(1, t + 1), repeat=n):
        tested += 1
        if tested > max_colorings:
            raise OverflowError(f"scan tested more than {max_colorings} colorings")
        for p, sup in tables:
            for v in sup:
                if col[p[v]] != col[v]:
                    break
            else:
                break
        else:
            return col, tested
    return None, tested
