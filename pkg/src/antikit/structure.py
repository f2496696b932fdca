"""Paths, rooted circuits and free sets of split-graph shelling antimatroids,
and recovering the graph from its feasible family.

Each closed-form description here has a brute-force counterpart working on
an explicit :class:`~antikit.family.SetFamily` (``brute_force_paths``,
``trace_census``) so the two can be compared on small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from . import limits
from .errors import FullPowerSet, NormalizationRequired, NotAnAntimatroid, NotSplitGraph, UnknownVertex
from .family import SetFamily, from_mask, index_of, set_key, to_mask
from .feasibility import enumerate_feasible, fos, verify_antimatroid
from .split_graph import SplitGraph, from_edges, is_normalized, neighbors, normalize

P1, P2, P3 = "P1", "P2", "P3"
C1, C2, C3 = "C1", "C2", "C3"


@dataclass(frozen=True)
class AntimatroidPath:
    members: frozenset
    cls: str
    anchor: object  # i for P1, k for P2, (i, k) for P3


@dataclass(frozen=True)
class RootedCircuit:
    support: frozenset
    root: int
    cls: str
    critical: bool

    @property
    def elements(self) -> frozenset:
        return self.support | {self.root}

    def __str__(self):
        tags = self.cls + (", critical" if self.critical else "")
        return f"{self.root} | {' '.join(map(str, sorted(self.support)))}  [{tags}]"


@dataclass(frozen=True)
class NotSplitShelling:
    """Refusal from :func:`recognize`; always falsy."""

    reason: str
    witness: tuple = ()

    def __bool__(self):
        return False


def path_poset(g: SplitGraph) -> list[AntimatroidPath]:
    """The paths (feasible sets with a single removable element) of ``g``'s antimatroid.

    ``g`` must be normalized: no independent vertex may be adjacent to the
    whole clique.
    """
    if not is_normalized(g):
        raise NormalizationRequired(
            "an independent vertex is adjacent to the whole clique; normalize the graph first"
        )
    found: dict[frozenset, AntimatroidPath] = {}

    def add(members, cls, anchor):
        members = frozenset(members)
        if members not in found:
            found[members] = AntimatroidPath(members, cls, anchor)

    independent = g.independent_set
    for i in g.independent:
        add({i}, P1, i)
    for k in g.clique:
        add({k} | (g.adjacency(k) & independent), P2, k)
    for i in g.independent:
        forced = fos(g, i)
        for k in sorted(g.adjacency(i)):
            add(forced | {k} | ((g.adjacency(k) & independent) - {i}), P3, (i, k))
    return sorted(found.values(), key=lambda p: (p.cls, set_key(p.members)))


def rooted_circuits(g: SplitGraph) -> list[RootedCircuit]:
    """All rooted circuits, tagged with the chordless path they come from.

    ``C1``: two independent neighbours of the root.  ``C2``: an independent
    neighbour ``i`` and a clique vertex not adjacent to ``i``.  ``C3``: an
    independent neighbour ``i`` and an independent non-neighbour ``j`` with
    a clique vertex adjacent to ``j`` but not ``i``.  Only the first two
    are critical.
    """
    found: dict[tuple, RootedCircuit] = {}

    def add(support, root, cls):
        key = (frozenset(support), root)
        if key not in found:
            found[key] = RootedCircuit(key[0], root, cls, cls in (C1, C2))

    independent = g.independent_set
    for k in g.clique:
        nb = g.adjacency(k)
        ind_nb = sorted(nb & independent)
        for i, j in combinations(ind_nb, 2):
            add({i, j}, k, C1)
        for i in ind_nb:
            for l in sorted((nb - independent) - g.adjacency(i)):
                add({i, l}, k, C2)
        for i in ind_nb:
            for j in sorted(independent - nb):
                # some m in the clique with m ~ j and m !~ i
                if not g.adjacency(j) <= g.adjacency(i):
                    add({i, j}, k, C3)
    order = {C1: 0, C2: 1, C3: 2}
    return sorted(found.values(), key=lambda c: (c.root, set_key(c.support), order[c.cls]))


def is_free(g: SplitGraph, x: Iterable[int]) -> bool:
    """Whether the antimatroid's trace on ``x`` is the full power set of ``x``."""
    x = g.check_subset(x)
    clique_part = x & g.clique_set
    ind_part = x & g.independent_set
    if not any(g.adjacency(h) & clique_part for h in ind_part):
        return True
    for h in sorted(ind_part):
        nb = g.adjacency(h)
        if clique_part <= nb and neighbors(g, ind_part - {h}) <= nb - clique_part:
            return True
    return False


def trace(fam: SetFamily, x: Iterable) -> SetFamily:
    x = frozenset(x)
    if not x <= fam.ground:
        raise UnknownVertex(f"{sorted(x - fam.ground)} are not in the ground set")
    return SetFamily(x, frozenset(s & x for s in fam.sets))


# -- brute-force oracles -----------------------------------------------------


def brute_force_paths(fam: SetFamily) -> SetFamily:
    """Members with exactly one element whose removal stays in the family."""
    sets = fam.sets
    out = [s for s in sets if s and sum((s - {v}) in sets for v in s) == 1]
    return SetFamily.from_sets(out, fam.ground)


@dataclass(frozen=True)
class TraceCensus:
    free: frozenset  # every free subset of the ground set
    circuits: frozenset  # (support, root) pairs


def trace_census(fam: SetFamily) -> TraceCensus:
    """Free sets and rooted circuits read directly off the traces of ``fam``.

    ``C`` is free when its trace is ``2^C``, and ``(C - {r}, r)`` is a rooted
    circuit when the trace is ``2^C`` minus ``{r}`` alone.  Exponential in
    the ground set.
    """
    order, index = index_of(fam.ground)
    n = len(order)
    limits.check_size(n, limits.enumeration_limit(), "trace_census")
    masks = [to_mask(s, index) for s in fam.sets]
    free, circuits = [], []
    for c in range(1 << n):
        seen = {m & c for m in masks}
        full = 1 << c.bit_count()
        if len(seen) == full:
            free.append(from_mask(c, order))
        elif len(seen) == full - 1:
            # exactly one subset of C is absent; a circuit needs it to be a singleton
            missing = [j for j in range(n) if c >> j & 1 and (1 << j) not in seen]
            if len(missing) == 1:
                root = missing[0]
                circuits.append((from_mask(c & ~(1 << root), order), order[root]))
    return TraceCensus(frozenset(free), frozenset(circuits))


# -- reconstruction ------------------------------------------------------------


def _candidate_edges(fam: SetFamily) -> tuple[frozenset, set]:
    """Isolated vertices and edges implied by the complements of pairs."""
    ground = fam.ground
    sets = fam.sets
    vertices = sorted(ground)
    pair_in = {
        frozenset((a, b)): (ground - {a, b}) in sets for a, b in combinations(vertices, 2)
    }
    isolated = frozenset(
        v
        for v in vertices
        if frozenset({v}) in sets
        and all(pair_in[frozenset((v, u))] for u in vertices if u != v)
    )
    edges = {
        pair for pair, present in pair_in.items() if present and not pair & isolated
    }
    return isolated, edges


def reconstruct_graph(fam: SetFamily, force_canonical: bool = False) -> SplitGraph:
    """The split graph whose shelling antimatroid is ``fam``.

    The graph is unique unless ``fam`` is the whole power set, in which case
    :class:`FullPowerSet` is raised, or, with ``force_canonical``, the
    edgeless graph is returned.  The clique / independent partition is
    recovered from the degree sequence and then normalized.
    """
    check = verify_antimatroid(fam)
    if not check:
        raise NotAnAntimatroid(
            f"axiom {check.axiom} fails, witness {[sorted(s) for s in check.witness]}"
        )
    if fam.is_power_set():
        if force_canonical:
            return SplitGraph((), tuple(sorted(fam.ground)))
        raise FullPowerSet("every subset is feasible; several split graphs produce this family")
    _, edges = _candidate_edges(fam)
    g = from_edges(sorted(fam.ground), edges)
    if g is None:
        raise NotSplitGraph("the reconstructed graph is not a split graph")
    return normalize(g)


def _forbidden_subgraph(vertices, edges: set) -> tuple:
    """An induced 2K2, C4 or C5 (split graphs have none of them)."""
    for quad in combinations(vertices, 4):
        inside = [p for p in map(frozenset, combinations(quad, 2)) if p in edges]
        degrees = [sum(v in p for p in inside) for v in quad]
        if len(inside) == 2 and max(degrees) == 1:
            return tuple(sorted(quad))
        if len(inside) == 4 and set(degrees) == {2}:
            return tuple(sorted(quad))
    for five in combinations(vertices, 5):
        inside = [p for p in map(frozenset, combinations(five, 2)) if p in edges]
        if len(inside) == 5 and all(sum(v in p for p in inside) == 2 for v in five):
            return tuple(sorted(five))
    return ()


def recognize(fam: SetFamily, force_canonical: bool = False) -> SplitGraph | NotSplitShelling:
    """Decide whether ``fam`` is the shelling antimatroid of some split graph.

    Builds the only candidate graph, checks it is split and that its
    feasible family is exactly ``fam``.  Returns the (normalized) graph, or
    a :class:`NotSplitShelling` carrying a witness.
    """
    limits.check_size(len(fam.ground), limits.enumeration_limit(), "recognize")
    if fam.is_power_set():
        if force_canonical:
            return SplitGraph((), tuple(sorted(fam.ground)))
        raise FullPowerSet("every subset is feasible; several split graphs produce this family")
    _, edges = _candidate_edges(fam)
    vertices = sorted(fam.ground)
    g = from_edges(vertices, edges)
    if g is None:
        return NotSplitShelling(
            "the candidate graph is not split",
            _forbidden_subgraph(vertices, edges),
        )
    produced = enumerate_feasible(g).sets
    diff = sorted(produced ^ fam.sets, key=set_key)
    if diff:
        s = diff[0]
        where = "missing from the family" if s in produced else "not feasible in the candidate graph"
        return NotSplitShelling(f"set {sorted(s)} is {where}", (s,))
    return normalize(g)
