"""Random split graphs for property tests and benchmarks."""

from __future__ import annotations

import random

from .split_graph import SplitGraph, normalize


def random_split_graph(
    rng: random.Random,
    max_vertices: int = 10,
    *,
    n: int | None = None,
    edge_prob: float | None = None,
    min_vertices: int = 1,
) -> SplitGraph:
    """A split graph with a random partition and random cross edges.

    Ids are drawn from ``0 .. 2n-1`` so they are neither contiguous nor
    aligned with the partition.  ``edge_prob`` defaults to a fresh uniform
    draw per graph, so sparse and dense graphs both show up.
    """
    if n is None:
        n = rng.randint(min_vertices, max_vertices)
    ids = rng.sample(range(2 * n), n) if n else []
    k = rng.randint(0, n)
    clique, independent = ids[:k], ids[k:]
    p = rng.random() if edge_prob is None else edge_prob
    cross = frozenset((a, b) for a in clique for b in independent if rng.random() < p)
    return SplitGraph(tuple(clique), tuple(independent), cross)


def random_normalized_split_graph(rng: random.Random, max_vertices: int = 10, **kwargs) -> SplitGraph:
    return normalize(random_split_graph(rng, max_vertices, **kwargs))


def sparse_split_graph(rng: random.Random, n: int, avg_degree: float = 6.0) -> SplitGraph:
    """Large split graph with about ``avg_degree`` cross neighbours per independent vertex.

    Cross edges are sampled per independent vertex rather than per pair, so
    generation is linear in the number of edges.
    """
    k = n // 2
    clique = list(range(k))
    independent = list(range(k, n))
    cross = set()
    for i in independent:
        d = min(k, max(0, round(rng.gauss(avg_degree, avg_degree / 3))))
        cross.update((c, i) for c in rng.sample(clique, d))
    return SplitGraph(tuple(clique), tuple(independent), frozenset(cross))
