"""Determining and critical sets, per-coloring extremes, and the four
extremal parameters.

A subset S determines a coloring when the coloring restricted to S has
exactly one proper extension; criticality is inclusion-minimality of that
property.  Determining status is monotone upward, so minimum-cardinality
determining sets are automatically critical, and the largest critical set
is found by walking the subset lattice top-down with memoized status.

Everything decomposes over connected components: a set determines a
coloring iff its trace on every component does, so the four parameters of
a disconnected graph are sums of per-component extremes.  Palette size is
the whole graph's, since components may not use all colors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coloring import (
    DEFAULT_MAX_VERTICES,
    Coloring,
    _count,
    _neighbor_lists,
    canonical_colorings,
    chromatic_number,
    is_uniquely_colorable,
)
from .errors import InternalError, InvalidParameterError, SizeLimitError
from .graphs import Graph, VertexSet, bits, connected_components, induced_subgraph

PARAM_NAMES = ("uscs", "oscs", "ulcs", "olcs")


@dataclass(frozen=True)
class ParamQuad:
    """The four extremal critical-set sizes, with optional witnesses.

    witnesses maps a parameter name to a (coloring, vertex set) pair that
    attains it.
    """

    uscs: int
    oscs: int
    ulcs: int
    olcs: int
    witnesses: dict[str, tuple[Coloring, VertexSet]] | None = None

    def values(self) -> tuple[int, int, int, int]:
        return (self.uscs, self.oscs, self.ulcs, self.olcs)

    def uniform_value(self) -> int | None:
        return self.uscs if self.uscs == self.oscs == self.ulcs == self.olcs else None


@dataclass(frozen=True)
class CriticalCertificate:
    coloring: Coloring
    subset: VertexSet
    determining: bool
    minimal: bool


@dataclass(frozen=True)
class ScsLcs:
    scs: int
    lcs: int
    scs_witness: VertexSet
    lcs_witness: VertexSet


def _extensions_capped(nbrs, colors, k: int, subset: VertexSet, cap: int = 2) -> int:
    full = (1 << k) - 1
    allowed = []
    queue = []
    for v in range(len(nbrs)):
        if subset >> v & 1:
            allowed.append(1 << colors[v])
            queue.append(v)
        else:
            allowed.append(full)
    return _count(nbrs, allowed, 0, queue, cap)


def is_determining(g: Graph, coloring: Coloring, subset: VertexSet) -> bool:
    """True iff the coloring restricted to `subset` extends uniquely."""
    if subset >> g.n:
        raise InvalidParameterError("subset has bits beyond vertex range")
    nbrs = _neighbor_lists(g)
    return _extensions_capped(nbrs, coloring.colors, coloring.k, subset) == 1


def is_critical(g: Graph, coloring: Coloring, subset: VertexSet) -> CriticalCertificate:
    """Determining plus minimality flags for (g, coloring, subset)."""
    nbrs = _neighbor_lists(g)
    det = _extensions_capped(nbrs, coloring.colors, coloring.k, subset) == 1
    minimal = det and all(
        _extensions_capped(nbrs, coloring.colors, coloring.k, subset ^ (1 << v)) != 1
        for v in bits(subset)
    )
    return CriticalCertificate(coloring, subset, det, minimal)


def _coloring_extremes(nbrs, colors, k: int):
    """(scs, scs_set, lcs, lcs_set) for one coloring of one component.

    Witness sets are the lexicographically least at their cardinality
    (combinations() yields sorted tuples in lex order).
    """
    n = len(nbrs)
    memo: dict[int, bool] = {}

    def det(mask: int) -> bool:
        r = memo.get(mask)
        if r is None:
            r = _extensions_capped(nbrs, colors, k, mask) == 1
            memo[mask] = r
        return r

    scs = scs_set = None
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            if det(m):
                scs, scs_set = size, m
                break
        if scs is not None:
            break
    if scs is None:
        raise InternalError("no determining set found (full set must determine)")
    lcs = lcs_set = None
    for size in range(n, scs - 1, -1):
        for combo in itertools.combinations(range(n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            if det(m) and all(not det(m ^ (1 << v)) for v in combo):
                lcs, lcs_set = size, m
                break
        if lcs is not None:
            break
    return scs, scs_set, lcs, lcs_set


def _check_proper(g: Graph, coloring: Coloring):
    if len(coloring.colors) != g.n:
        raise InvalidParameterError("coloring length must equal vertex count")
    if not coloring.is_proper(g):
        raise InvalidParameterError("coloring is not proper")


def scs_lcs_for_coloring(
    g: Graph, coloring: Coloring, max_vertices: int = DEFAULT_MAX_VERTICES
) -> ScsLcs:
    """Smallest and largest critical-set sizes for one fixed coloring."""
    if g.n > max_vertices:
        raise SizeLimitError(f"exact search capped at {max_vertices} vertices")
    _check_proper(g, coloring)
    scs = lcs = 0
    scs_mask = lcs_mask = 0
    for comp in connected_components(g):
        sub, verts = induced_subgraph(g, comp)
        sub_colors = tuple(coloring.colors[v] for v in verts)
        s, s_set, l, l_set = _coloring_extremes(_neighbor_lists(sub), sub_colors, coloring.k)
        scs += s
        lcs += l
        for i in bits(s_set):
            scs_mask |= 1 << verts[i]
        for i in bits(l_set):
            lcs_mask |= 1 << verts[i]
    return ScsLcs(scs, lcs, scs_mask, lcs_mask)


def _four_params_engine(g: Graph, k: int, max_vertices: int, at_chi: bool) -> ParamQuad:
    if g.n > max_vertices:
        raise SizeLimitError(f"exact search capped at {max_vertices} vertices")
    if g.n == 0:
        empty = Coloring((), 0)
        return ParamQuad(0, 0, 0, 0, {name: (empty, 0) for name in PARAM_NAMES})

    # per component and parameter: (value, coloring tuple, witness mask)
    per_component = []
    for comp in connected_components(g):
        sub, verts = induced_subgraph(g, comp)
        nbrs = _neighbor_lists(sub)
        ext: dict[str, tuple[int, tuple[int, ...], int]] = {}
        for tup in canonical_colorings(sub, k):
            scs, scs_set, lcs, lcs_set = _coloring_extremes(nbrs, tup, k)
            for name, value, mask, better in (
                ("uscs", scs, scs_set, lambda a, b: a < b),
                ("oscs", scs, scs_set, lambda a, b: a > b),
                ("ulcs", lcs, lcs_set, lambda a, b: a < b),
                ("olcs", lcs, lcs_set, lambda a, b: a > b),
            ):
                if name not in ext or better(value, ext[name][0]):
                    ext[name] = (value, tup, mask)
        if not ext:
            raise InternalError(f"component admits no proper {k}-coloring")
        per_component.append((verts, ext))

    values = {}
    witnesses = {}
    for name in PARAM_NAMES:
        total = 0
        colors = [0] * g.n
        mask = 0
        for verts, ext in per_component:
            value, tup, sub_mask = ext[name]
            total += value
            for i, v in enumerate(verts):
                colors[v] = tup[i]
            for i in bits(sub_mask):
                mask |= 1 << verts[i]
        values[name] = total
        witnesses[name] = (Coloring(tuple(colors), k), mask)

    quad = ParamQuad(values["uscs"], values["oscs"], values["ulcs"], values["olcs"], witnesses)
    if not (quad.uscs <= quad.oscs <= quad.olcs and quad.uscs <= quad.ulcs <= quad.olcs):
        raise InternalError(f"parameter ordering violated: {quad.values()}")
    if at_chi and g.n >= 1 and quad.olcs > g.n - 1:
        raise InternalError(f"critical set of size {quad.olcs} exceeds n-1")
    return quad


def four_params(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> ParamQuad:
    """Exact (uscs, oscs, ulcs, olcs) over optimal colorings, with witnesses."""
    k = chromatic_number(g, max_vertices)
    return _four_params_engine(g, k, max_vertices, at_chi=True)


def four_params_k(g: Graph, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> ParamQuad:
    """Same extremes over all proper colorings into [k], k >= chi(g).

    Colorings need not use every color, so values can differ from (and the
    n-1 upper bound need not apply beyond) the k = chi case.
    """
    chi = chromatic_number(g, max_vertices)
    if k < chi:
        raise InvalidParameterError(f"k={k} below chromatic number {chi}")
    return _four_params_engine(g, k, max_vertices, at_chi=(k == chi))


def is_critically_uniform(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int | None:
    """The common critical-set size if all four parameters agree, else None."""
    return four_params(g, max_vertices).uniform_value()


def verify_prop1(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    """Uniquely colorable implies every critical set has size chi - 1."""
    if g.n == 0:
        return True
    if not is_uniquely_colorable(g, max_vertices):
        return True
    chi = chromatic_number(g, max_vertices)
    return four_params(g, max_vertices).uniform_value() == chi - 1


def verify_converse_prop1(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    """Every critical set of size chi - 1 implies uniquely colorable."""
    if g.n == 0:
        return True
    chi = chromatic_number(g, max_vertices)
    if four_params(g, max_vertices).uniform_value() != chi - 1:
        return True
    return is_uniquely_colorable(g, max_vertices)
