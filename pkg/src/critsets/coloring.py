"""Exact coloring computations: chromatic number, palette-orbit coloring
enumeration, and capped extension counting for partial assignments.

Colorings are quotiented by palette permutation throughout; the canonical
orbit representative assigns colors in first-use order by vertex index.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import InvalidParameterError, SizeLimitError
from .graphs import Graph, VertexSet, bits

DEFAULT_MAX_VERTICES = 20


@dataclass(frozen=True)
class Coloring:
    """Total color assignment into {0..k-1}."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if any(not 0 <= c < self.k for c in self.colors):
            if self.colors:
                raise InvalidParameterError("color out of palette range")

    def is_proper(self, g: Graph) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())


@dataclass
class PartialAssignment:
    """Colors on a vertex subset only, against a palette of size k."""

    k: int
    colors: dict[int, int]

    @property
    def support(self) -> VertexSet:
        m = 0
        for v in self.colors:
            m |= 1 << v
        return m

    @classmethod
    def restrict(cls, coloring: Coloring, subset: VertexSet) -> "PartialAssignment":
        return cls(coloring.k, {v: coloring.colors[v] for v in bits(subset)})

    def is_proper_on_support(self, g: Graph) -> bool:
        for v, c in self.colors.items():
            for w in g.neighbors(v):
                if self.colors.get(w) == c:
                    return False
        return True


def _neighbor_lists(g: Graph) -> list[list[int]]:
    return [g.neighbors(v) for v in range(g.n)]


def _count(nbrs: list[list[int]], allowed: list[int], fixed: int, queue: list[int], cap: int) -> int:
    """Count completions of `allowed` (bitmask per vertex), truncated at cap.

    Unit propagation first (a singleton vertex removes its color from all
    neighbors), then MRV branching.
    """
    while queue:
        v = queue.pop()
        if fixed >> v & 1:
            continue
        fixed |= 1 << v
        b = allowed[v]
        for w in nbrs[v]:
            aw = allowed[w]
            if aw & b:
                aw &= ~b
                if not aw:
                    return 0
                allowed[w] = aw
                if not aw & (aw - 1) and not fixed >> w & 1:
                    queue.append(w)
    best = -1
    best_count = 1 << 30
    for v in range(len(nbrs)):
        if not fixed >> v & 1:
            c = allowed[v].bit_count()
            if c < best_count:
                best_count = c
                best = v
                if c == 2:
                    break
    if best < 0:
        return 1
    total = 0
    m = allowed[best]
    while m:
        b = m & -m
        m ^= b
        branch = allowed.copy()
        branch[best] = b
        total += _count(nbrs, branch, fixed, [best], cap - total)
        if total >= cap:
            return cap
    return total


def count_colorings_extending(g: Graph, k: int, fixed_colors: Mapping[int, int], cap: int) -> int:
    """Proper colorings of g into [k] agreeing with fixed_colors, up to cap."""
    if cap < 1:
        raise InvalidParameterError("cap must be at least 1")
    if k == 0:
        return 1 if g.n == 0 else 0
    full = (1 << k) - 1
    allowed = [full] * g.n
    queue = []
    for v, c in fixed_colors.items():
        if not 0 <= c < k or not 0 <= v < g.n:
            raise InvalidParameterError(f"assignment {v}->{c} out of range")
        allowed[v] = 1 << c
        queue.append(v)
    return _count(_neighbor_lists(g), allowed, 0, queue, cap)


def count_extensions(g: Graph, partial: PartialAssignment, cap: int = 2) -> int:
    """Number of proper colorings into [k] agreeing with `partial`, capped."""
    return count_colorings_extending(g, partial.k, partial.colors, cap)


# ---------------------------------------------------------------------------
# chromatic number


def _greedy_clique(g: Graph) -> VertexSet:
    """A maximal clique found greedily from each start vertex; best kept."""
    best = 0
    order = sorted(range(g.n), key=g.degree, reverse=True)
    for start in order:
        clique = 1 << start
        cand = g.adj[start]
        while cand:
            v = max(bits(cand), key=lambda w: (g.adj[w] & cand).bit_count())
            clique |= 1 << v
            cand &= g.adj[v]
        if clique.bit_count() > best.bit_count():
            best = clique
    return best


def _greedy_color_count(g: Graph) -> int:
    order = sorted(range(g.n), key=g.degree, reverse=True)
    colors: dict[int, int] = {}
    used = 0
    for v in order:
        taken = 0
        for w in g.neighbors(v):
            if w in colors:
                taken |= 1 << colors[w]
        c = 0
        while taken >> c & 1:
            c += 1
        colors[v] = c
        used = max(used, c + 1)
    return used


def chromatic_number(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    """Minimum k admitting a proper k-coloring; 0 for the empty graph."""
    if g.n > max_vertices:
        raise SizeLimitError(f"chromatic_number capped at {max_vertices} vertices")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    clique = _greedy_clique(g)
    lo = clique.bit_count()
    hi = _greedy_color_count(g)
    nbrs = _neighbor_lists(g)
    for k in range(lo, hi):
        full = (1 << k) - 1
        allowed = [full] * g.n
        queue = []
        # pin a clique to distinct colors: breaks palette symmetry
        for i, v in enumerate(bits(clique)):
            allowed[v] = 1 << i
            queue.append(v)
        if _count(nbrs, allowed, 0, queue, 1):
            return k
    return hi


# ---------------------------------------------------------------------------
# orbit-canonical enumeration


def canonical_colorings(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Proper colorings into [k] with colors in first-use order by vertex
    index: exactly one representative per palette-permutation orbit,
    yielded in lexicographic order."""
    n = g.n
    if n == 0:
        yield ()
        return
    if k == 0:
        return
    lower = [[u for u in g.neighbors(v) if u < v] for v in range(n)]
    colors = [0] * n

    def rec(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(colors)
            return
        forbid = 0
        for u in lower[v]:
            forbid |= 1 << colors[u]
        for c in range(min(used + 1, k)):
            if not forbid >> c & 1:
                colors[v] = c
                yield from rec(v + 1, max(used, c + 1))

    yield from rec(0, 0)


def enumerate_optimal_colorings(
    g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Iterator[Coloring]:
    """One canonical representative per orbit of proper chi(g)-colorings."""
    k = chromatic_number(g, max_vertices)
    for tup in canonical_colorings(g, k):
        yield Coloring(tup, k)


def is_uniquely_colorable(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    """True iff g has exactly one optimal coloring up to palette permutation."""
    it = enumerate_optimal_colorings(g, max_vertices)
    first = next(it, None)
    if first is None:
        return False
    return next(it, None) is None


def colorful_vertices(g: Graph, coloring: Coloring) -> VertexSet:
    """Vertices whose closed neighborhood shows all k palette colors."""
    out = 0
    for v in range(g.n):
        seen = 1 << coloring.colors[v]
        for w in g.neighbors(v):
            seen |= 1 << coloring.colors[w]
        if seen.bit_count() == coloring.k:
            out |= 1 << v
    return out


def sample_proper_coloring(g: Graph, k: int, rng: random.Random) -> Coloring:
    """One proper k-coloring found by randomized backtracking (any size).

    Not uniform over colorings; used for seeded spot checks on instances
    too large for exhaustive enumeration.  High-degree vertices are colored
    first (random order within a degree class), which keeps backtracking
    shallow on graphs with many low-degree pendants.
    """
    order = list(range(g.n))
    rng.shuffle(order)
    order.sort(key=g.degree, reverse=True)
    colors = [-1] * g.n
    palettes = []
    for v in order:
        p = list(range(k))
        rng.shuffle(p)
        palettes.append(p)

    def rec(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        taken = 0
        for w in g.neighbors(v):
            if colors[w] >= 0:
                taken |= 1 << colors[w]
        for c in palettes[i]:
            if not taken >> c & 1:
                colors[v] = c
                if rec(i + 1):
                    return True
                colors[v] = -1
        return False

    if not rec(0):
        raise InvalidParameterError(f"graph admits no proper {k}-coloring")
    return Coloring(tuple(colors), k)
