#!/usr/bin/env python3
"""Write all non-isomorphic graphs on 8 vertices as graph6 lines.

Every 8-vertex graph is a 7-vertex graph plus one vertex, so we extend each
7-vertex class from the networkx atlas by every neighbourhood and keep one
representative per nauty certificate. Expected output: 12346 lines.

usage: gen_graph8_corpus.py OUT
"""
import sys
from itertools import combinations

import networkx as nx
import pynauty


def certificate(g, n):
    adj = {v: [u for u in g[v]] for v in range(n)}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def main(out):
    base = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 7]
    assert len(base) == 1044
    seen = {}
    for g7 in base:
        g7 = nx.convert_node_labels_to_integers(g7)
        for mask in range(128):
            g = g7.copy()
            g.add_node(7)
            for v in range(7):
                if mask >> v & 1:
                    g.add_edge(v, 7)
            c = certificate(g, 8)
            if c not in seen:
                seen[c] = g
    lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in seen.values())
    with open(out, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(len(lines))


if __name__ == "__main__":
    main(sys.argv[1])
