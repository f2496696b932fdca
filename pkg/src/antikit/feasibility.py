"""Feasible sets of the vertex-shelling antimatroid of a split graph.

A vertex set ``F`` is feasible when its vertices can be removed one at a
time, each one simplicial in what is left of the graph.  On split graphs
this is equivalent to ``N(F)`` inducing a clique, which is what
:func:`is_feasible` tests.  :func:`feasible_by_definition` searches for an
ordering directly and is kept as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from . import limits
from .errors import NotFeasible, NotIndependentVertex, UnknownVertex
from .family import SetFamily, from_mask, index_of, to_mask
from .split_graph import SplitGraph, neighbors

Shelling = tuple  # an ordering (f_1, ..., f_|F|) of a feasible set


@dataclass(frozen=True)
class FeasibleClass:
    """``Star`` (``i is None``) or ``IFeasible(i)``."""

    i: int | None = None

    @property
    def is_star(self) -> bool:
        return self.i is None

    def __str__(self):
        return "Star" if self.i is None else f"IFeasible({self.i})"

    def sort_key(self):
        return (-1,) if self.i is None else (0, self.i)


STAR = FeasibleClass()


def _is_clique(g: SplitGraph, vs: frozenset[int]) -> bool:
    outside = vs & g.independent_set
    if len(outside) > 1:
        return False
    if not outside:
        return True
    (i,) = outside
    return (vs - outside) <= g.adjacency(i)


def is_feasible(g: SplitGraph, f: Iterable[int]) -> bool:
    return _is_clique(g, neighbors(g, f))


def is_simplicial(g: SplitGraph, v: int, removed: frozenset[int] = frozenset()) -> bool:
    """Whether ``v`` is simplicial in ``G`` minus ``removed``."""
    nb = g.adjacency(v) - removed
    return all(b in g.adjacency(a) for a in nb for b in nb if a < b)


def is_shelling(g: SplitGraph, order: Iterable[int]) -> bool:
    """Check an ordering vertex by vertex against the simplicial condition."""
    order = list(order)
    if len(set(order)) != len(order):
        return False
    g.check_subset(order)
    removed: set[int] = set()
    for v in order:
        if not is_simplicial(g, v, frozenset(removed)):
            return False
        removed.add(v)
    return True


def feasible_by_definition(g: SplitGraph, f: Iterable[int]) -> bool:
    """Exhaustive search for a simplicial shelling of ``f``.

    Explores prefixes as sets (the condition on the next vertex only depends
    on which vertices are already gone), so the cost is at most ``2^|f|``.
    """
    f = g.check_subset(f)
    limits.check_size(len(f), limits.enumeration_limit(), "feasible_by_definition")
    seen = {frozenset()}
    stack = [frozenset()]
    while stack:
        prefix = stack.pop()
        if prefix == f:
            return True
        for v in f - prefix:
            if is_simplicial(g, v, prefix):
                nxt = prefix | {v}
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return False


def shelling(g: SplitGraph, f: Iterable[int]) -> Shelling:
    """A simplicial shelling of a feasible set.

    Concatenates ``F ∩ I``, then the clique members of ``F`` with no
    neighbour in ``I \\ F``, then the remaining clique members of ``F``;
    each block in increasing id order.
    """
    f = g.check_subset(f)
    if not is_feasible(g, f):
        raise NotFeasible(f"{sorted(f)} is not feasible")
    outside_i = g.independent_set - f
    reach = neighbors(g, outside_i) if outside_i else frozenset()
    in_k = f & g.clique_set
    first = sorted(f & g.independent_set)
    second = sorted(in_k - reach)
    third = sorted(in_k & reach)
    return tuple(first + second + third)


def _require_independent(g: SplitGraph, i: int) -> None:
    if i not in g:
        raise UnknownVertex(f"vertex {i} is not in the graph")
    if i not in g.independent_set:
        raise NotIndependentVertex(f"vertex {i} is not in the independent set")


def fos(g: SplitGraph, i: int) -> frozenset[int]:
    """Forced set of ``i``: members of every set whose only outside independent neighbour is ``i``.

    Clique vertices not adjacent to ``i`` together with independent vertices
    whose neighbourhood is not contained in ``N(i)``.
    """
    _require_independent(g, i)
    nb = g.adjacency(i)
    out = {k for k in g.clique if k not in nb}
    out.update(j for j in g.independent if not g.adjacency(j) <= nb)
    return frozenset(out)


def ufs(g: SplitGraph, i: int) -> frozenset[int]:
    """Unforced set of ``i``: everything outside ``fos(i)`` except ``i`` itself."""
    return g.vertex_set - fos(g, i) - {i}


def classify(g: SplitGraph, f: Iterable[int]) -> FeasibleClass:
    f = g.check_subset(f)
    nb = neighbors(g, f)
    if not _is_clique(g, nb):
        raise NotFeasible(f"{sorted(f)} is not feasible")
    outside = nb & g.independent_set
    if not outside:
        return STAR
    (i,) = outside
    return FeasibleClass(i)


def enumerate_feasible(g: SplitGraph) -> SetFamily:
    """Every feasible set, by scanning all ``2^|V|`` subsets as bitmasks."""
    n = len(g)
    limits.check_size(n, limits.enumeration_limit(), "enumerate_feasible")
    order, index = index_of(g.vertices)
    adj = [to_mask(g.adjacency(v), index) for v in order]
    kmask = to_mask(g.clique, index)
    imask = to_mask(g.independent, index)
    union_nb = [0] * (1 << n)
    found = [0]
    for mask in range(1, 1 << n):
        low = mask & -mask
        nb = union_nb[mask ^ low] | adj[low.bit_length() - 1]
        union_nb[mask] = nb
        nb &= ~mask
        outside = nb & imask
        if outside:
            if outside & (outside - 1):
                continue
            if nb & kmask & ~adj[outside.bit_length() - 1]:
                continue
        found.append(mask)
    return SetFamily(frozenset(order), frozenset(from_mask(m, order) for m in found))


def partition_feasible(g: SplitGraph, fam: SetFamily | None = None) -> dict[FeasibleClass, SetFamily]:
    """Split the feasible family into the Star class and one class per independent vertex."""
    if fam is None:
        fam = enumerate_feasible(g)
    groups: dict[FeasibleClass, list] = {STAR: []}
    for i in g.independent:
        groups[FeasibleClass(i)] = []
    for s in fam:
        groups[classify(g, s)].append(s)
    return {c: SetFamily.from_sets(sets, fam.ground) for c, sets in groups.items()}


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of :func:`verify_antimatroid`; truthy iff every axiom holds."""

    ok: bool
    axiom: str | None = None
    witness: tuple = ()

    def __bool__(self):
        return self.ok


def _irreducible_masks(masks: set[int], n: int) -> list[int]:
    # below[S] = union of all members contained in S
    below = [0] * (1 << n)
    for s in range(1 << n):
        acc = s if s in masks else 0
        rest = s
        while rest:
            low = rest & -rest
            acc |= below[s ^ low]
            rest ^= low
        below[s] = acc
    out = []
    for s in masks:
        if not s:
            continue
        strict = 0
        rest = s
        while rest:
            low = rest & -rest
            strict |= below[s ^ low]
            rest ^= low
        if strict != s:
            out.append(s)
    return sorted(out)


def verify_antimatroid(fam: SetFamily) -> AxiomCheck:
    """Check accessibility axioms in order: ``V`` present, union-closed, accessible.

    Union closure is tested against join-irreducible members only: every
    member is a union of the irreducible members it contains, so adding them
    one at a time reaches any union.
    """
    ground = fam.ground
    if ground not in fam.sets:
        return AxiomCheck(False, "AM0", (ground,))
    order, index = index_of(ground)
    n = len(order)
    ordered = list(fam)
    masks = [to_mask(s, index) for s in ordered]
    present = set(masks)
    if n * (1 << n) < len(present) ** 2:
        generators = _irreducible_masks(present, n)
    else:
        generators = sorted(present)
    for a in masks:
        for b in generators:
            if a | b not in present:
                return AxiomCheck(False, "AM1", (from_mask(a, order), from_mask(b, order)))
    for s, m in zip(ordered, masks):
        if not m:
            continue
        rest = m
        while rest:
            low = rest & -rest
            if m ^ low in present:
                break
            rest ^= low
        else:
            return AxiomCheck(False, "AM2", (s,))
    return AxiomCheck(True)


# -- monophonic convexity --------------------------------------------------


def _adjacency_map(graph) -> Mapping:
    if isinstance(graph, SplitGraph):
        return {v: graph.adjacency(v) for v in graph.vertices}
    return {v: frozenset(graph[v]) for v in graph}


def is_m_convex(graph, c: Iterable) -> bool:
    """Whether ``c`` contains every vertex of every chordless path between two of its members.

    ``graph`` is a :class:`SplitGraph` or any mapping from a vertex to its
    neighbours (a networkx graph works).  The search is exponential and is
    bounded by the chordless-path limit.
    """
    adj = _adjacency_map(graph)
    c = frozenset(c)
    unknown = c - adj.keys()
    if unknown:
        raise UnknownVertex(f"vertices {sorted(unknown, key=repr)} are not in the graph")
    limits.check_size(len(adj), limits.chordless_path_limit(), "is_m_convex")
    if len(c) <= 1 or len(c) == len(adj):
        return True
    # A violating path can be cut down to one whose interior avoids c.
    for u in c:
        stack = [(x,) for x in adj[u] if x not in c]
        while stack:
            path = stack.pop()
            last = path[-1]
            earlier = (u,) + path[:-1]
            for y in adj[last]:
                if y == u or y in path:
                    continue
                if any(y in adj[p] for p in earlier):
                    continue
                if y in c:
                    return False
                stack.append(path + (y,))
    return True
