"""Split graphs with an explicit clique / independent-set partition.

Only the clique-to-independent ("cross") edges are stored; every pair of
clique vertices is adjacent by construction and no pair of independent
vertices can be adjacent.  Vertex ids are caller-supplied non-negative
integers and are never renumbered.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import AbstractSet, Iterable, Mapping

from .errors import (
    DuplicateEdge,
    FormatError,
    IllegalEdge,
    OverlappingPartition,
    UnknownVertex,
)

VertexSet = frozenset  # an immutable set of vertex ids


@dataclass(frozen=True)
class SplitGraph:
    """A split graph ``G = (K ∪ I, E)``.

    ``cross_edges`` holds pairs ``(k, i)`` with ``k`` in the clique and ``i``
    in the independent set.  Use :func:`validate` to build one from raw,
    unordered input.
    """

    clique: tuple[int, ...]
    independent: tuple[int, ...]
    cross_edges: frozenset[tuple[int, int]] = frozenset()
    _adj: Mapping[int, frozenset[int]] = field(
        init=False, repr=False, compare=False, default=None
    )

    def __post_init__(self):
        clique = tuple(sorted(self.clique))
        independent = tuple(sorted(self.independent))
        for v in clique + independent:
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise FormatError(f"vertex ids must be non-negative integers, got {v!r}")
        k_set, i_set = set(clique), set(independent)
        if len(k_set) != len(clique) or len(i_set) != len(independent):
            raise OverlappingPartition("a vertex is listed twice in the same part")
        common = k_set & i_set
        if common:
            raise OverlappingPartition(
                f"vertices {sorted(common)} are in both the clique and the independent set"
            )
        adj: dict[int, set[int]] = {v: set() for v in clique + independent}
        for k in clique:
            adj[k].update(k_set)
            adj[k].discard(k)
        cross = frozenset(tuple(e) for e in self.cross_edges)
        for k, i in cross:
            if k not in k_set or i not in i_set:
                raise IllegalEdge(f"cross edge ({k}, {i}) must go from the clique to the independent set")
            adj[k].add(i)
            adj[i].add(k)
        object.__setattr__(self, "clique", clique)
        object.__setattr__(self, "independent", independent)
        object.__setattr__(self, "cross_edges", cross)
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._adj))

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self._adj)

    @property
    def clique_set(self) -> frozenset[int]:
        return frozenset(self.clique)

    @property
    def independent_set(self) -> frozenset[int]:
        return frozenset(self.independent)

    def __len__(self):
        return len(self._adj)

    def __contains__(self, v):
        return v in self._adj

    def adjacency(self, v: int) -> frozenset[int]:
        """N(v), the neighbourhood of a single vertex."""
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(f"vertex {v} is not in the graph") from None

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adjacency(u)

    def edges(self) -> frozenset[frozenset[int]]:
        """The full edge set, clique edges included."""
        out = {frozenset(p) for p in combinations(self.clique, 2)}
        out.update(frozenset(e) for e in self.cross_edges)
        return frozenset(out)

    def isolated(self) -> frozenset[int]:
        return frozenset(v for v, nb in self._adj.items() if not nb)

    def check_subset(self, s: Iterable[int]) -> frozenset[int]:
        s = frozenset(s)
        unknown = s - self._adj.keys()
        if unknown:
            raise UnknownVertex(f"vertices {sorted(unknown)} are not in the graph")
        return s


def validate(raw_k: Iterable[int], raw_i: Iterable[int], raw_edges: Iterable) -> SplitGraph:
    """Build a :class:`SplitGraph` from raw lists, rejecting anything non-canonical.

    Every listed edge must join the clique to the independent set.  Clique
    edges are implicit and listing one is an error, as is listing the same
    edge twice (in either orientation).
    """
    k_list, i_list = list(raw_k), list(raw_i)
    k_set, i_set = set(k_list), set(i_list)
    if len(k_set) != len(k_list) or len(i_set) != len(i_list):
        raise OverlappingPartition("a vertex is listed twice in the same part")
    if k_set & i_set:
        raise OverlappingPartition(
            f"vertices {sorted(k_set & i_set)} are in both the clique and the independent set"
        )
    known = k_set | i_set
    seen: set[tuple[int, int]] = set()
    for edge in raw_edges:
        a, b = edge
        for v in (a, b):
            if v not in known:
                raise UnknownVertex(f"edge {a}-{b} uses unknown vertex {v}")
        if a == b:
            raise IllegalEdge(f"self-loop {a}-{b}")
        if a in k_set and b in k_set:
            raise IllegalEdge(f"edge {a}-{b} lies inside the clique; clique edges are implicit")
        if a in i_set and b in i_set:
            raise IllegalEdge(f"edge {a}-{b} joins two independent vertices")
        pair = (a, b) if a in k_set else (b, a)
        if pair in seen:
            raise DuplicateEdge(f"edge {a}-{b} is listed twice")
        seen.add(pair)
    return SplitGraph(tuple(k_list), tuple(i_list), frozenset(seen))


def neighbors(g: SplitGraph, s: Iterable[int]) -> frozenset[int]:
    """N(s): vertices outside ``s`` adjacent to some member of ``s``."""
    s = g.check_subset(s)
    out: set[int] = set()
    for v in s:
        out |= g.adjacency(v)
    return frozenset(out - s)


def is_isolated(g: SplitGraph, v: int) -> bool:
    return not g.adjacency(v)


def normalize(g: SplitGraph) -> SplitGraph:
    """Move every independent vertex adjacent to the whole clique into the clique.

    Candidates are examined in increasing id order and the scan restarts
    after each move, since the clique grows.  The empty clique is left
    alone.
    """
    clique = set(g.clique)
    independent = sorted(g.independent)
    if not clique:
        return g
    moved = True
    while moved:
        moved = False
        for i in independent:
            if g.adjacency(i) == clique:
                clique.add(i)
                independent.remove(i)
                moved = True
                break
    if len(clique) == len(g.clique):
        return g
    cross = {(k, i) for i in independent for k in g.adjacency(i)}
    return SplitGraph(tuple(clique), tuple(independent), frozenset(cross))


def is_normalized(g: SplitGraph) -> bool:
    if not g.clique:
        return True
    k = g.clique_set
    return all(g.adjacency(i) != k for i in g.independent)


def split_partition(
    vertices: Iterable, edges: Iterable[AbstractSet]
) -> tuple[list, list] | None:
    """Partition an arbitrary simple graph into (clique, independent set).

    Uses the degree-sequence characterisation of split graphs (Hammer and
    Simeone): with degrees sorted non-increasingly, let ``m`` be the largest
    index with ``d_m >= m - 1``; the graph is split iff
    ``sum_{j<=m} d_j == m(m-1) + sum_{j>m} d_j``, and then the first ``m``
    vertices form a clique.  Returns ``None`` for non-split graphs.
    """
    vertices = sorted(vertices)
    degree = {v: 0 for v in vertices}
    for e in edges:
        for v in e:
            degree[v] += 1
    order = sorted(vertices, key=lambda v: (-degree[v], v))
    m = 0
    for j, v in enumerate(order, start=1):
        if degree[v] >= j - 1:
            m = j
    head = sum(degree[v] for v in order[:m])
    tail = sum(degree[v] for v in order[m:])
    if head != m * (m - 1) + tail:
        return None
    return sorted(order[:m]), sorted(order[m:])


def from_edges(vertices: Iterable[int], edges: Iterable[AbstractSet[int]]) -> SplitGraph | None:
    """Split graph on ``vertices`` with exactly ``edges``, or ``None`` if not split."""
    vertices = list(vertices)
    edges = [frozenset(e) for e in edges]
    parts = split_partition(vertices, edges)
    if parts is None:
        return None
    clique, independent = parts
    k_set = set(clique)
    cross = []
    for e in edges:
        a, b = sorted(e)
        if a in k_set and b in k_set:
            continue
        cross.append((a, b) if a in k_set else (b, a))
    return validate(clique, independent, cross)


# -- text format -----------------------------------------------------------
#
#   K: 1 2 3
#   I: 4 5 6
#   E: 1-4 1-5 2-5 2-6 3-6


def _int_token(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise FormatError(f"line {lineno}: {token!r} is not an integer vertex id") from None
    if value < 0:
        raise FormatError(f"line {lineno}: vertex id {value} is negative")
    return value


def _parse_edge(token: str, lineno: int, convert) -> tuple:
    parts = token.split("-")
    if len(parts) != 2 or not parts[0] or not parts[1]:
        raise FormatError(f"line {lineno}: malformed edge {token!r}, expected a-b")
    return convert(parts[0], lineno), convert(parts[1], lineno)


def parse_sections(text: str, keys: tuple[str, ...], required: tuple[str, ...]) -> dict[str, list[tuple[str, int]]]:
    """Split a ``KEY: tokens`` file into sections, each line at most once."""
    sections: dict[str, list[tuple[str, int]]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in keys:
            raise FormatError(f"line {lineno}: expected one of {', '.join(k + ':' for k in keys)}")
        if key in sections:
            raise FormatError(f"line {lineno}: duplicate {key}: line")
        sections[key] = [(tok, lineno) for tok in rest.split()]
    for key in required:
        if key not in sections:
            raise FormatError(f"missing {key}: line")
    return sections


def parse_graph(text: str) -> SplitGraph:
    sections = parse_sections(text, ("K", "I", "E"), ("K", "I"))
    clique = [_int_token(t, n) for t, n in sections["K"]]
    independent = [_int_token(t, n) for t, n in sections["I"]]
    edges = [_parse_edge(t, n, _int_token) for t, n in sections.get("E", [])]
    return validate(clique, independent, edges)


def format_graph(g: SplitGraph) -> str:
    lines = [
        "K: " + " ".join(map(str, g.clique)),
        "I: " + " ".join(map(str, g.independent)),
    ]
    if g.cross_edges:
        lines.append("E: " + " ".join(f"{k}-{i}" for k, i in sorted(g.cross_edges)))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def graph_to_dict(g: SplitGraph) -> dict:
    return {
        "K": list(g.clique),
        "I": list(g.independent),
        "E": [list(e) for e in sorted(g.cross_edges)],
    }
