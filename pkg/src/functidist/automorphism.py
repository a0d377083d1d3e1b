"""Automorphism groups of vertex-colored graphs.

The search refines the input coloring to an equitable partition, then
individualizes the first vertex of the first non-singleton cell, level by
level, until the partition is discrete. That leftmost leaf fixes a base
``b_0, b_1, ...``; for each level (deepest first) every other vertex of the
target cell is tested for membership in the orbit of ``b_i`` under the
pointwise stabilizer of ``b_0..b_{i-1}``. The group order is the product of
those orbit sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ._backend import kernels
from .graph import Graph


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``0..n-1``; ``images[v]`` is the image of ``v``."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (p * q)(v) = p(q(v))
        p = self.images
        return Permutation(tuple(p[x] for x in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for v, w in enumerate(self.images):
            inv[w] = v
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.images))

    def support(self) -> tuple[int, ...]:
        return tuple(v for v, w in enumerate(self.images) if v != w)

    def to_json(self) -> list[int]:
        return list(self.images)


@dataclass(frozen=True)
class Coloring:
    """Vertex labeling ``colors[v]`` in ``1..t``."""

    colors: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(int(c) for c in self.colors)
        if not cols:
            raise ValueError("a coloring needs at least one vertex")
        if min(cols) < 1:
            raise ValueError("colors start at 1")
        object.__setattr__(self, "colors", cols)

    @property
    def t(self) -> int:
        return max(self.colors)

    @property
    def num_used(self) -> int:
        return len(set(self.colors))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def permuted(self, sigma: Permutation) -> "Coloring":
        """The coloring ``v -> colors[sigma(v)]``."""
        return Coloring(tuple(self.colors[sigma(v)] for v in range(len(self.colors))))

    def to_json(self) -> list[int]:
        return list(self.colors)


@dataclass(frozen=True)
class AutGroup:
    n: int
    generators: tuple[Permutation, ...]
    order: int
    base: tuple[int, ...] = ()

    def elements(self, cap: int = 100_000) -> list[Permutation]:
        """Closure of the generators, sorted by image tuple."""
        ident = Permutation.identity(self.n)
        seen = {ident.images}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in self.generators:
                    q = g * p
                    if q.images not in seen:
                        seen.add(q.images)
                        if len(seen) > cap:
                            raise OverflowError(f"group closure exceeds {cap} elements")
                        nxt.append(q)
            frontier = nxt
        return [Permutation(p) for p in sorted(seen)]

    def orbits(self) -> list[tuple[int, ...]]:
        return orbits(self)

    def is_trivial(self) -> bool:
        return self.order == 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "order": self.order,
            "generators": [g.to_json() for g in self.generators],
        }


def _color_list(G: Graph, coloring) -> list[int]:
    if coloring is None:
        return [0] * G.n
    cols = list(coloring.colors if isinstance(coloring, Coloring) else coloring)
    if len(cols) != G.n:
        raise ValueError(f"coloring has {len(cols)} entries for {G.n} vertices")
    return cols


def _individualize(c: list[int], v: int) -> list[int]:
    out = [2 * x + 1 for x in c]
    out[v] = 2 * c[v]
    return out


def _shape(c: list[int]) -> tuple[int, ...]:
    sizes = [0] * (max(c) + 1)
    for x in c:
        sizes[x] += 1
    return tuple(sizes)


def _target_cell(c: list[int], shape: tuple[int, ...]) -> list[int]:
    for color, size in enumerate(shape):
        if size > 1:
            return [v for v, x in enumerate(c) if x == color]
    raise AssertionError("partition is discrete")


def _orbit(point: int, gens: list[tuple[int, ...]]) -> set[int]:
    orb = {point}
    stack = [point]
    while stack:
        v = stack.pop()
        for g in gens:
            w = g[v]
            if w not in orb:
                orb.add(w)
                stack.append(w)
    return orb


class _Search:
    def __init__(self, G: Graph, colors: list[int], first_only: bool = False):
        self.G = G
        self.kg = G.kernel
        self.colors = colors
        self.first_only = first_only
        self.nodes = 0

    def refine(self, c):
        self.nodes += 1
        return kernels.refine(self.kg, c)

    def run(self):
        c = self.refine(self.colors)
        n = self.G.n
        path, shapes, base = [c], [_shape(c)], []
        while len(shapes[-1]) < n:
            v = _target_cell(c, shapes[-1])[0]
            base.append(v)
            c = self.refine(_individualize(c, v))
            path.append(c)
            shapes.append(_shape(c))
        self.path, self.shapes, self.base = path, shapes, base
        self.leaf = c

        gens: list[tuple[int, ...]] = []
        order = 1
        for i in reversed(range(len(base))):
            b = base[i]
            orbit = _orbit(b, gens)
            rejected: set[int] = set()
            for w in _target_cell(path[i], shapes[i]):
                if w in orbit or w in rejected:
                    continue
                sigma = self._find(i, w)
                if sigma is None:
                    rejected |= _orbit(w, gens)
                    continue
                gens.append(sigma)
                if self.first_only:
                    return gens, None
                orbit = _orbit(b, gens)
            order *= len(orbit)
        return gens, order

    def _find(self, i, w):
        c = self.refine(_individualize(self.path[i], w))
        if _shape(c) != self.shapes[i + 1]:
            return None
        return self._descend(i + 1, c)

    def _descend(self, j, c):
        if j == len(self.base):
            pos = [0] * len(c)
            for v, x in enumerate(c):
                pos[x] = v
            sigma = tuple(pos[x] for x in self.leaf)
            cols = self.colors
            if all(cols[sigma[v]] == cols[v] for v in range(len(c))) and kernels.is_automorphism(
                self.kg, sigma
            ):
                return sigma
            return None
        for x in _target_cell(c, self.shapes[j]):
            c2 = self.refine(_individualize(c, x))
            if _shape(c2) == self.shapes[j + 1]:
                found = self._descend(j + 1, c2)
                if found is not None:
                    return found
        return None


def automorphism_group(G: Graph, initial=None) -> AutGroup:
    """Generators and exact order of the (color-preserving) automorphism group."""
    search = _Search(G, _color_list(G, initial))
    gens, order = search.run()
    return AutGroup(G.n, tuple(Permutation(g) for g in gens), order, tuple(search.base))


def nontrivial_automorphism(G: Graph, coloring) -> Permutation | None:
    """Some non-identity color-preserving automorphism, or ``None``."""
    gens, _ = _Search(G, _color_list(G, coloring), first_only=True).run()
    return Permutation(gens[0]) if gens else None


def is_distinguishing(G: Graph, f) -> bool:
    """True iff no non-identity automorphism preserves the coloring ``f``."""
    cols = _color_list(G, f)
    c = kernels.refine(G.kernel, cols)
    if len(set(c)) == G.n:
        return True
    gens, _ = _Search(G, cols, first_only=True).run()
    return not gens


def orbits(group: AutGroup) -> list[tuple[int, ...]]:
    """Orbit partition, each orbit sorted, orbits ordered by least member."""
    parent = list(range(group.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in group.generators:
        for v in range(group.n):
            a, b = find(v), find(g(v))
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes: dict[int, list[int]] = {}
    for v in range(group.n):
        classes.setdefault(find(v), []).append(v)
    return [tuple(c) for _, c in sorted(classes.items())]


def all_automorphisms(G: Graph, coloring=None, max_order: int = 10**6) -> list[Permutation]:
    """Every color-preserving automorphism by exhaustive extension search.

    Independent of the refinement machinery above; used as the oracle.
    """
    elems = kernels.enumerate_automorphisms(G.kernel, _color_list(G, coloring), max_order)
    return [Permutation(e) for e in elems]


def brute_force_group(G: Graph, max_n: int = 10, coloring=None) -> AutGroup:
    """Group listed element by element with :func:`all_automorphisms`.

    The generator list is every non-identity element.
    """
    if G.n > max_n:
        raise ValueError(f"brute force is capped at {max_n} vertices, graph has {G.n}")
    elems = all_automorphisms(G, coloring)
    gens = tuple(p for p in elems if not p.is_identity())
    return AutGroup(G.n, gens, len(elems))


def preserves(sigma, coloring) -> bool:
    """True iff ``sigma`` maps every vertex to one of the same color."""
    imgs = sigma.images if isinstance(sigma, Permutation) else tuple(sigma)
    cols = coloring.colors if isinstance(coloring, Coloring) else tuple(coloring)
    return all(cols[imgs[v]] == cols[v] for v in range(len(cols)))
