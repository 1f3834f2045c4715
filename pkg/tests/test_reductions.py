import random
from math import comb

import pytest

from critsets.coloring import (
    Coloring,
    canonical_colorings,
    chromatic_number,
    colorful_vertices,
    sample_proper_coloring,
)
from critsets.critical import four_params
from critsets.errors import InvalidParameterError
from critsets.graphs import (
    bits,
    enumerate_graphs,
    is_bipartite,
    make_complete,
    make_cycle,
    make_empty,
    make_path,
)
from critsets.reductions import (
    forced_vertices,
    proof_coloring_olcs,
    proof_coloring_ulcs,
    reduce_olcs,
    reduce_ulcs,
    verify_reduction_small,
)


def test_ulcs_instance_sizes():
    inst = reduce_ulcs(make_complete(3))
    assert (inst.graph.n, inst.k) == (27, 9)
    inst = reduce_ulcs(make_complete(2))
    assert (inst.graph.n, inst.k) == (9, 6)
    inst = reduce_ulcs(make_empty(3))
    assert inst.graph.n == 6 and inst.graph.m == 3  # isolated vertices plus triangle
    assert not inst.vertices_with_kind("V2")


def test_olcs_instance_sizes():
    inst = reduce_olcs(make_path(3))
    assert (inst.graph.n, inst.k) == (13, 8)
    assert len(inst.vertices_with_kind("V1")) == 4
    assert len(inst.vertices_with_kind("V2")) == 6
    inst = reduce_olcs(make_complete(3))
    assert (inst.graph.n, inst.k) == (33, 26)
    inst = reduce_olcs(make_complete(2))
    assert inst.k == 2 and not inst.vertices_with_kind("V2")


def test_size_formulas_small_inputs():
    for h in enumerate_graphs(5):
        n, m = h.n, h.m
        inst = reduce_ulcs(h)
        assert inst.graph.n == n + m * (m + n + 1) + 3
        assert inst.graph.m == 2 * m * (m + n + 1) + 3
        assert inst.k == m + n + 3
        pair_sum = sum(comb(h.degree(v), 2) for v in range(n))
        inst = reduce_olcs(h)
        assert inst.graph.n == 2 * m + (2 * m + 2) * pair_sum + 3
        assert inst.graph.m == m + (2 * m + 2) * pair_sum + 3
        assert inst.k == (2 * m + 2) * pair_sum + 2


def test_instance_structure():
    inst = reduce_ulcs(make_complete(3))
    g = inst.graph
    v1 = inst.vertices_with_kind("V1")
    assert all(not g.has_edge(u, w) for u in v1 for w in v1 if u != w)
    v3 = inst.vertices_with_kind("V3")
    assert all(g.has_edge(u, w) for u in v3 for w in v3 if u != w)
    core = sum(1 << v for v in v1 + inst.vertices_with_kind("V2"))
    from critsets.graphs import induced_subgraph

    sub, _ = induced_subgraph(g, core)
    assert is_bipartite(sub)
    assert chromatic_number(g, max_vertices=g.n) == 3

    inst = reduce_olcs(make_path(3))
    for y in inst.vertices_with_kind("V2"):
        assert inst.graph.degree(y) == 1


def test_proof_coloring_ulcs():
    inst = reduce_ulcs(make_complete(3))
    c3 = Coloring((0, 1, 2), 3)
    lifted = proof_coloring_ulcs(inst, c3)
    assert lifted.is_proper(inst.graph)
    rainbow = colorful_vertices(inst.graph, lifted)
    v2 = inst.vertices_with_kind("V2")
    assert all(rainbow >> v & 1 for v in v2)
    corners = [lifted.colors[v] for v in inst.vertices_with_kind("V3")]
    assert sorted(corners) == [0, 1, 2]
    with pytest.raises(InvalidParameterError):
        proof_coloring_ulcs(inst, Coloring((0, 0, 1), 3))
    with pytest.raises(InvalidParameterError):
        proof_coloring_olcs(inst, c3)


def test_proof_coloring_olcs():
    inst = reduce_olcs(make_path(3))
    c3 = Coloring((1, 0, 1), 3)  # center vertex 1 colored 0
    lifted = proof_coloring_olcs(inst, c3)
    assert lifted.is_proper(inst.graph)
    rainbow = colorful_vertices(inst.graph, lifted)
    for y in inst.vertices_with_kind("V2"):
        role = inst.roles[y]
        assert role.info[1] == 1  # all replicas sit at the degree-2 center
        assert lifted.colors[y] == 1  # least color other than 0
        assert not rainbow >> y & 1  # degree-1 vertices see only two colors


def test_forced_vertices():
    k4 = make_complete(4)
    coloring = Coloring((0, 1, 2, 3), 4)
    assert forced_vertices(k4, coloring) == 0

    inst = reduce_olcs(make_path(3))
    lifted = proof_coloring_olcs(inst, Coloring(next(canonical_colorings(make_path(3), 3)), 3))
    forced = forced_vertices(inst.graph, lifted)
    for y in inst.vertices_with_kind("V2"):
        assert forced >> y & 1

    # a coloring of the min-lcs instance whose induced assignment makes an
    # H-edge monochromatic forces every replica of that edge
    inst = reduce_ulcs(make_complete(2))
    replicas = inst.vertices_with_kind("V2")
    colors = [0, 0] + [1] * len(replicas) + [0, 1, 2]
    coloring = Coloring(tuple(colors), 3)
    assert coloring.is_proper(inst.graph)
    forced = forced_vertices(inst.graph, coloring)
    for r in replicas:
        assert forced >> r & 1


def test_forced_vertices_lie_in_every_witness():
    inst = reduce_ulcs(make_complete(2))
    quad = four_params(inst.graph)
    for coloring, subset in quad.witnesses.values():
        assert forced_vertices(inst.graph, coloring) & ~subset == 0


def test_verify_full_mode():
    rep = verify_reduction_small(make_complete(2), "ulcs")
    assert rep.mode == "full" and rep.consistent
    assert rep.h_three_colorable and rep.exact_value < rep.k
    rep = verify_reduction_small(make_path(3), "olcs")
    assert rep.mode == "full" and rep.consistent
    assert rep.h_three_colorable and rep.exact_value >= rep.k


def test_verify_certificate_modes():
    rep = verify_reduction_small(make_complete(4), "ulcs", samples=20, seed=1)
    assert rep.mode == "certificate" and rep.consistent
    assert not rep.h_three_colorable

    rep = verify_reduction_small(make_path(3), "olcs", mode="certificate", seed=1)
    assert rep.consistent and rep.h_three_colorable

    rep = verify_reduction_small(make_complete(3), "ulcs", mode="certificate")
    assert rep.consistent and rep.h_three_colorable

    rep = verify_reduction_small(make_complete(4), "olcs", mode="certificate", samples=5, seed=2)
    assert rep.consistent and not rep.h_three_colorable


def test_role_map_json():
    inst = reduce_olcs(make_path(3))
    data = inst.role_map_json()
    assert data["variant"] == "olcs" and data["k"] == 8
    assert len(data["roles"]) == 13
    kinds = {info["kind"] for info in data["roles"].values()}
    assert kinds == {"V1", "V2", "V3"}
    sample = data["roles"][str(inst.vertices_with_kind("V2")[0])]
    assert {"kind", "vertex", "edge", "other_edge", "replica"} <= set(sample)


def test_sampled_colorings_on_gadgets_are_proper():
    inst = reduce_ulcs(make_complete(4))
    rng = random.Random(0)
    for _ in range(3):
        c = sample_proper_coloring(inst.graph, 3, rng)
        assert c.is_proper(inst.graph)
