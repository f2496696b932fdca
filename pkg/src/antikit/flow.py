"""Maximum s-t flow (Dinic's algorithm) on small explicit networks.

Capacities may be ints, Fractions, floats or ``math.inf``; the arithmetic
is whatever those types provide, so integer and rational inputs give exact
results.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, NamedTuple

from .errors import InputError


@dataclass
class FlowNetwork:
    source: Hashable = "source"
    sink: Hashable = "sink"
    arcs: list = field(default_factory=list)

    def __post_init__(self):
        if self.source == self.sink:
            raise InputError("source and sink must differ")
        arcs, self.arcs = self.arcs, []
        for arc in arcs:
            self.add_arc(*arc)

    def add_arc(self, u, v, capacity) -> None:
        if v == self.source:
            raise InputError(f"arc {u!r}->{v!r} enters the source")
        if u == self.sink:
            raise InputError(f"arc {u!r}->{v!r} leaves the sink")
        if not capacity >= 0:
            raise InputError(f"arc {u!r}->{v!r} has negative capacity {capacity!r}")
        self.arcs.append((u, v, capacity))

    @property
    def nodes(self) -> list:
        seen = {self.source: None, self.sink: None}
        for u, v, _ in self.arcs:
            seen.setdefault(u)
            seen.setdefault(v)
        return list(seen)


class MaxFlow(NamedTuple):
    value: object
    source_side: frozenset


def cut_capacity(net: FlowNetwork, source_side) -> object:
    side = frozenset(source_side)
    return sum((c for u, v, c in net.arcs if u in side and v not in side), 0)


def max_flow(net: FlowNetwork) -> MaxFlow:
    """Maximum flow value and the source side of a minimum cut.

    The source side returned is the set reachable from the source in the
    final residual network, i.e. the smallest source side over all minimum
    cuts.
    """
    nodes = net.nodes
    index = {v: j for j, v in enumerate(nodes)}
    adj: list[list[int]] = [[] for _ in nodes]
    head: list[int] = []
    cap: list = []
    for u, v, c in net.arcs:
        a, b = index[u], index[v]
        adj[a].append(len(head))
        head.append(b)
        cap.append(c)
        adj[b].append(len(head))
        head.append(a)
        cap.append(0)

    s, t = index[net.source], index[net.sink]
    total = 0
    while True:
        level = _levels(adj, head, cap, s)
        if level[t] < 0:
            break
        total += _blocking_flow(adj, head, cap, level, s, t)
        if total == math.inf:
            break

    level = _levels(adj, head, cap, s)
    side = frozenset(nodes[j] for j, d in enumerate(level) if d >= 0)
    return MaxFlow(total, side)


def _levels(adj, head, cap, s) -> list[int]:
    level = [-1] * len(adj)
    level[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for e in adj[u]:
            v = head[e]
            if level[v] < 0 and cap[e] > 0:
                level[v] = level[u] + 1
                queue.append(v)
    return level


def _blocking_flow(adj, head, cap, level, s, t):
    pointer = [0] * len(adj)
    total = 0
    while True:
        path: list[int] = []
        u = s
        while u != t:
            edges = adj[u]
            while pointer[u] < len(edges):
                e = edges[pointer[u]]
                if cap[e] > 0 and level[head[e]] == level[u] + 1:
                    break
                pointer[u] += 1
            else:
                if u == s:
                    return total
                level[u] = -1
                e = path.pop()
                u = head[e ^ 1]
                pointer[u] += 1
                continue
            path.append(e)
            u = head[e]
        pushed = min(cap[e] for e in path)
        if pushed == math.inf:
            return pushed
        for e in path:
            cap[e] -= pushed
            cap[e ^ 1] += pushed
        total += pushed
