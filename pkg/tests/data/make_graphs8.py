"""Regenerate graphs8.g6: every simple graph on 8 vertices up to isomorphism.

Each 8-vertex graph is a 7-vertex graph plus one vertex, so extending every
atlas graph on 7 nodes by every neighbourhood and removing isomorphic copies
gives the full list (12346 graphs).  Takes about a minute.

    python3 tests/data/make_graphs8.py
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from pathlib import Path

import networkx as nx


def invariant(g: nx.Graph) -> tuple:
    degrees = tuple(sorted(d for _, d in g.degree()))
    triangles = tuple(sorted(nx.triangles(g).values()))
    return degrees, triangles, nx.weisfeiler_lehman_graph_hash(g, iterations=3)


def main() -> None:
    buckets: dict[tuple, list[nx.Graph]] = defaultdict(list)
    base = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 7]
    assert len(base) == 1044
    for g in base:
        for r in range(8):
            for nb in combinations(range(7), r):
                h = g.copy()
                h.add_node(7)
                h.add_edges_from((7, v) for v in nb)
                bucket = buckets[invariant(h)]
                if not any(nx.is_isomorphic(h, other) for other in bucket):
                    bucket.append(h)
    graphs = [g for bucket in buckets.values() for g in bucket]
    assert len(graphs) == 12346, len(graphs)
    lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs)
    Path(__file__).with_name("graphs8.g6").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
