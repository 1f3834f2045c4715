"""Regenerate the packaged 7-vertex atlas (graph6, one line per class).

Source: the Read-Wilson atlas as shipped with networkx.  Each graph is
re-encoded through this package's canonical form so the file is sorted by
canonical adjacency encoding and provably duplicate-free.
"""

import sys

import networkx as nx

sys.path.insert(0, "src")

from critsets.graphs import Graph, canonical_form, emit_graph6


def main():
    out = []
    seen = set()
    for atlas_graph in nx.graph_atlas_g():
        if atlas_graph.number_of_nodes() != 7:
            continue
        nodes = sorted(atlas_graph.nodes())
        pos = {v: i for i, v in enumerate(nodes)}
        g = Graph.from_edges(7, [(pos[u], pos[v]) for u, v in atlas_graph.edges()])
        c = canonical_form(g)
        if c.adj in seen:
            raise SystemExit("duplicate isomorphism class in source atlas")
        seen.add(c.adj)
        out.append(c)
    out.sort(key=lambda g: g.adj)
    print(len(out), "classes")
    with open("src/critsets/data/atlas_n7.g6", "w") as fh:
        for g in out:
            fh.write(emit_graph6(g) + "\n")


if __name__ == "__main__":
    main()
