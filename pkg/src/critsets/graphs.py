"""Immutable simple undirected graphs with bitmask adjacency rows.

Vertex subsets are plain ints used as bitmasks (bit v set <=> vertex v in
the set).  Graphs are hashable values; all constructors and operators
return fresh graphs and never mutate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import Graph6Error, InvalidParameterError, SizeLimitError

VertexSet = int

CANONICAL_CAP = 8
ENUMERATION_CAP = 6


def bits(mask: VertexSet) -> list[int]:
    """Set bit positions of `mask`, ascending."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def mask_of(vertices) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Graph on vertices 0..n-1; adj[v] has bit w set iff {v,w} is an edge."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InvalidParameterError("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise InvalidParameterError(f"row {v} has bits beyond vertex range")
            if row >> v & 1:
                raise InvalidParameterError(f"loop at vertex {v}")
            m = row & full
            while m:
                b = m & -m
                m ^= b
                w = b.bit_length() - 1
                if not self.adj[w] >> v & 1:
                    raise InvalidParameterError(f"asymmetric edge ({v},{w})")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"bad edge ({u},{v}) for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1) << (v + 1)
            for w in bits(row):
                out.append((v, w))
        return out

    def relabel(self, perm) -> "Graph":
        """Graph with new vertex i = old vertex perm[i]."""
        pos = [0] * self.n
        for i, v in enumerate(perm):
            pos[v] = i
        rows = [0] * self.n
        for i, v in enumerate(perm):
            m = self.adj[v]
            r = 0
            while m:
                b = m & -m
                m ^= b
                r |= 1 << pos[b.bit_length() - 1]
            rows[i] = r
        return Graph(self.n, tuple(rows))


# ---------------------------------------------------------------------------
# basic constructors


def make_empty(n: int) -> Graph:
    if n < 0:
        raise InvalidParameterError("n must be nonnegative")
    return Graph(n, (0,) * n)


def make_complete(n: int) -> Graph:
    if n < 0:
        raise InvalidParameterError("n must be nonnegative")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def make_path(n: int) -> Graph:
    if n < 0:
        raise InvalidParameterError("n must be nonnegative")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# ---------------------------------------------------------------------------
# operators


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Union with h's vertices relabelled by offset g.n."""
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)))


def add_pendant_to_each(g: Graph) -> Graph:
    """Attach one new degree-1 neighbor to every original vertex."""
    n = g.n
    edges = g.edges() + [(v, n + v) for v in range(n)]
    return Graph.from_edges(2 * n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Box product on U x V with row-major indexing (u*h.n + v)."""
    n = g.n * h.n
    edges = []
    for u in range(g.n):
        for v in range(h.n):
            a = u * h.n + v
            for w in h.neighbors(v):
                if w > v:
                    edges.append((a, u * h.n + w))
            for x in g.neighbors(u):
                if x > u:
                    edges.append((a, x * h.n + v))
    return Graph.from_edges(n, edges)


def strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product on U x V: adjacency in each factor allows equality."""
    n = g.n * h.n
    edges = []
    for u in range(g.n):
        gu = g.adj[u] | (1 << u)
        for v in range(h.n):
            a = u * h.n + v
            hv = h.adj[v] | (1 << v)
            for x in bits(gu):
                for w in bits(hv):
                    b = x * h.n + w
                    if b > a:
                        edges.append((a, b))
    return Graph.from_edges(n, edges)


def edge_union(g: Graph, h: Graph) -> Graph:
    """Union of edge sets over a common vertex set."""
    if g.n != h.n:
        raise InvalidParameterError("edge_union needs equal vertex counts")
    return Graph(g.n, tuple(a | b for a, b in zip(g.adj, h.adj)))


# ---------------------------------------------------------------------------
# structure queries


def connected_components(g: Graph) -> list[VertexSet]:
    """Vertex masks of the connected components, by least vertex."""
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v]
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def bipartition(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """A 2-coloring (side0, side1) if g is bipartite, else None."""
    side = [None] * g.n
    for comp in connected_components(g):
        root = bits(comp)[0]
        side[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if side[w] is None:
                    side[w] = side[v] ^ 1
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    a = mask_of(v for v in range(g.n) if side[v] == 0)
    return a, ((1 << g.n) - 1) ^ a


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def induced_subgraph(g: Graph, vertex_mask: VertexSet) -> tuple[Graph, list[int]]:
    """Induced subgraph plus the list mapping new index -> original vertex."""
    verts = bits(vertex_mask)
    pos = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        r = 0
        m = g.adj[v] & vertex_mask
        while m:
            b = m & -m
            m ^= b
            r |= 1 << pos[b.bit_length() - 1]
        rows.append(r)
    return Graph(len(verts), tuple(rows)), verts


# ---------------------------------------------------------------------------
# graph6 interchange format

_G6_MAX_LONG = 258047  # largest n encodable with the single '~' header


def emit_graph6(g: Graph) -> str:
    """Standard graph6 encoding: size header, then the upper triangle in
    column-major order packed into 6-bit printable chunks."""
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    elif n <= _G6_MAX_LONG:
        head = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    else:
        raise InvalidParameterError(f"graph6 output capped at {_G6_MAX_LONG} vertices")
    nbits = n * (n - 1) // 2
    buf = []
    acc = 0
    filled = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            filled += 1
            if filled == 6:
                buf.append(chr(63 + acc))
                acc = 0
                filled = 0
    if filled:
        buf.append(chr(63 + (acc << (6 - filled))))
    assert len(buf) == (nbits + 5) // 6
    return head + "".join(buf)


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 string (optional '>>graph6<<' prefix allowed)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range", off)
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = s[1:]
        body_off = 1
    else:
        if len(s) >= 2 and s[1] == "~":
            raise Graph6Error("graph6 inputs beyond 258047 vertices unsupported", 1)
        if len(s) < 4:
            raise Graph6Error("truncated long-form size header", len(s))
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
        body_off = 4
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) < expect:
        raise Graph6Error(f"body too short for n={n}", body_off + len(body))
    if len(body) > expect:
        raise Graph6Error(f"trailing characters after n={n} body", body_off + expect)
    rows = [0] * n
    idx = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for bidx, ch in enumerate(body):
        v = ord(ch) - 63
        for t in range(6):
            bit = v >> (5 - t) & 1
            if idx < nbits:
                if bit:
                    i, j = pairs[idx]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                idx += 1
            elif bit:
                raise Graph6Error("nonzero padding bits", body_off + bidx)
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# canonical forms and small-order enumeration


def _refine(g: Graph) -> list[int]:
    """Iterated neighborhood refinement; returns stable vertex class ids
    ordered by a permutation-invariant signature."""
    classes = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = []
        for v in range(g.n):
            nb = tuple(sorted(classes[w] for w in g.neighbors(v)))
            sigs.append((classes[v], nb))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == classes:
            return classes
        classes = new


def _encode(g: Graph, order: tuple[int, ...]) -> int:
    """Upper-triangle bit string of g relabelled by `order`, MSB first."""
    code = 0
    for i in range(g.n):
        row = g.adj[order[i]]
        for j in range(i + 1, g.n):
            code = code << 1 | (row >> order[j] & 1)
    return code


def canonical_form(g: Graph, cap: int = CANONICAL_CAP) -> Graph:
    """Lexicographically minimal relabelling; isomorphic graphs coincide.

    Candidate orders are restricted to those respecting the refinement
    partition, so the factorial blowup only bites for highly regular
    graphs.  Capped at `cap` vertices.
    """
    if g.n > cap:
        raise SizeLimitError(f"canonical_form capped at {cap} vertices (got {g.n})")
    if g.n <= 1:
        return g
    classes = _refine(g)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(classes):
        cells.setdefault(c, []).append(v)
    cell_lists = [cells[c] for c in sorted(cells)]
    best_code = None
    best_order = None
    for parts in itertools.product(*(itertools.permutations(cell) for cell in cell_lists)):
        order = tuple(itertools.chain.from_iterable(parts))
        code = _encode(g, order)
        if best_code is None or code < best_code:
            best_code = code
            best_order = order
    return g.relabel(best_order)


@lru_cache(maxsize=None)
def enumerate_graphs(n: int) -> tuple[Graph, ...]:
    """All isomorphism classes on n vertices, canonical and sorted.

    Built by vertex augmentation with canonical dedup; capped at 6 (the
    7-vertex catalog ships as a graph6 data file instead).
    """
    if n < 0:
        raise InvalidParameterError("n must be nonnegative")
    if n > ENUMERATION_CAP:
        raise SizeLimitError(f"enumeration capped at {ENUMERATION_CAP} vertices")
    if n == 0:
        return (Graph(0, ()),)
    seen: dict[tuple[int, ...], Graph] = {}
    for g in enumerate_graphs(n - 1):
        for nb in range(1 << (n - 1)):
            rows = [row | (nb >> v & 1) << (n - 1) for v, row in enumerate(g.adj)]
            rows.append(nb)
            cand = canonical_form(Graph(n, tuple(rows)))
            seen[cand.adj] = cand
    return tuple(sorted(seen.values(), key=lambda h: h.adj))


def atlas_graphs(n: int) -> tuple[Graph, ...]:
    """Isomorphism classes on n vertices; computed up to 6, packaged file at 7."""
    if n <= ENUMERATION_CAP:
        return enumerate_graphs(n)
    if n == 7:
        from importlib.resources import files

        text = files("critsets.data").joinpath("atlas_n7.g6").read_text()
        return tuple(parse_graph6(line) for line in text.splitlines() if line.strip())
    raise SizeLimitError("atlases beyond 7 vertices must be supplied as graph6 files")
