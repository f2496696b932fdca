"""Maximum-weight filters and maximum-weight feasible sets.

A maximum-weight filter of a poset is found through a minimum cut
(Picard's reduction); the feasible sets of a split graph split into the
filters of ``≺`` and, for each independent vertex ``i``, the sets
``fos(i) ∪ H`` with ``H`` a filter of ``≺`` on ``ufs(i)`` meeting the
clique.  One closure solve per class, plus a few forced solves when the
best ``H`` misses the clique, gives the overall optimum.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ForcedNotClosed, FormatError, InputError, UnknownVertex
from .family import SetFamily, set_key
from .feasibility import STAR, FeasibleClass, classify, enumerate_feasible
from .flow import FlowNetwork, max_flow
from .numeric import parse_number
from .poset import Poset, build_prec, upward_closure
from .split_graph import SplitGraph

log = logging.getLogger(__name__)

MAX, MIN = "max", "min"


@dataclass(frozen=True)
class OptResult:
    best_set: frozenset
    best_weight: object
    cls: FeasibleClass


class _Sentinel:
    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return self.name


_SOURCE = _Sentinel("source")
_SINK = _Sentinel("sink")


def _weight_of(w: Mapping, s: Iterable):
    return sum((w[v] for v in s), 0)


def _check_total(w: Mapping, ground: Iterable) -> None:
    missing = [v for v in ground if v not in w]
    if missing:
        raise InputError(f"no weight given for {sorted(missing)}")


def closure_network(p: Poset, w: Mapping, forced: Iterable = ()) -> FlowNetwork:
    """Flow network whose minimum cuts are the maximum-weight filters containing ``forced``.

    Positive weights hang off the source, negative ones feed the sink, and
    each cover ``u ≺ v`` becomes an uncrossable arc ``u -> v`` (taking ``u``
    drags ``v`` along).  "Uncrossable" is a finite capacity exceeding the
    total absolute weight, which keeps the arithmetic exact.
    """
    big = sum((abs(w[v]) for v in p.ground), 0) + 1
    net = FlowNetwork(_SOURCE, _SINK)
    for v in p.ground:
        if w[v] > 0:
            net.add_arc(_SOURCE, v, w[v])
        elif w[v] < 0:
            net.add_arc(v, _SINK, -w[v])
    for u, v in sorted(p.covers):
        net.add_arc(u, v, big)
    for v in sorted(forced):
        net.add_arc(_SOURCE, v, big)
    return net


def max_closure(p: Poset, w: Mapping, forced: Iterable = ()) -> tuple[frozenset, object]:
    """Maximum-weight filter of ``p`` containing ``forced``, and its weight.

    Among optimal filters the smallest one is returned (it is unique: the
    intersection of two optimal closures is optimal).
    """
    forced = frozenset(forced)
    stray = forced - set(p.ground)
    if stray:
        raise ForcedNotClosed(f"forced elements {sorted(stray)} are not in the poset")
    _check_total(w, p.ground)
    net = closure_network(p, w, forced)
    _, side = max_flow(net)
    chosen = frozenset(side - {_SOURCE})
    assert upward_closure(p, forced) <= chosen
    return chosen, _weight_of(w, chosen)


def _better(a: tuple, b: tuple | None) -> bool:
    """Candidate order: larger weight, then fewer elements, then lexicographic."""
    if b is None:
        return True
    if a[1] != b[1]:
        return a[1] > b[1]
    return set_key(a[0]) < set_key(b[0])


def _ufs_poset(g: SplitGraph, i: int) -> tuple[frozenset, Poset]:
    nb = g.adjacency(i)
    forced_k = [k for k in g.clique if k not in nb]
    free_i, forced_i = [], []
    for j in g.independent:
        if j == i:
            continue
        (free_i if g.adjacency(j) <= nb else forced_i).append(j)
    # inside ufs(i) every cover starts in N(i), since N(j) ⊆ N(i) there
    covers = [(k, j) for j in free_i for k in g.adjacency(j)]
    return frozenset(forced_k + forced_i), Poset(tuple(nb) + tuple(free_i), frozenset(covers))


def max_weight_feasible(g: SplitGraph, w: Mapping, sense: str = MAX) -> OptResult:
    """Optimal feasible set of the shelling antimatroid of ``g``.

    ``sense="min"`` minimises instead (by negating the weights).  Ties go to
    the smaller set, then to the lexicographically smaller sorted tuple.
    """
    _check_total(w, g.vertices)
    if sense == MIN:
        res = max_weight_feasible(g, {v: -w[v] for v in g.vertices}, MAX)
        return OptResult(res.best_set, -res.best_weight, res.cls)
    if sense != MAX:
        raise InputError(f"sense must be {MAX!r} or {MIN!r}, got {sense!r}")

    star_set, star_weight = max_closure(build_prec(g), w)
    best = (star_set, star_weight, STAR)
    clique = g.clique_set
    for i in g.independent:
        nb = g.adjacency(i)
        if not nb:
            continue  # H must meet N(i), so there are no i-feasible sets
        forced, sub = _ufs_poset(g, i)
        base = _weight_of(w, forced)
        h, hw = max_closure(sub, w)
        if h & clique:
            options = [(h, hw)]
        else:
            options = [max_closure(sub, w, {k}) for k in sorted(nb)]
        for h, hw in options:
            cand = (forced | h, base + hw, FeasibleClass(i))
            if _better(cand, best):
                best = cand
    return OptResult(*best)


def brute_force_max_weight(
    g: SplitGraph, w: Mapping, sense: str = MAX, family: SetFamily | None = None
) -> OptResult:
    """Scan every feasible set; same tie-break as :func:`max_weight_feasible`."""
    _check_total(w, g.vertices)
    if family is None:
        family = enumerate_feasible(g)
    sign = 1 if sense == MAX else -1
    best = None
    for s in family:
        cand = (s, sign * _weight_of(w, s))
        if _better(cand, best):
            best = cand
    s, value = best
    return OptResult(s, sign * value, classify(g, s))


# -- weight files ------------------------------------------------------------
#
#   <vertex> <weight>      one per line, '#' comments


def parse_weights(text: str) -> dict[int, object]:
    weights: dict[int, object] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected '<vertex> <weight>'")
        try:
            v = int(parts[0])
        except ValueError:
            raise FormatError(f"line {lineno}: {parts[0]!r} is not a vertex id") from None
        if v in weights:
            raise FormatError(f"line {lineno}: vertex {v} given twice")
        try:
            weights[v] = parse_number(parts[1])
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    return weights


def complete_weights(g: SplitGraph, weights: Mapping) -> dict[int, object]:
    """Restrict to ``g``'s vertices, defaulting missing ones to 0 with a warning."""
    unknown = set(weights) - g.vertex_set
    if unknown:
        raise UnknownVertex(f"weights given for unknown vertices {sorted(unknown)}")
    missing = [v for v in g.vertices if v not in weights]
    if missing:
        log.warning("no weight for vertices %s; using 0", " ".join(map(str, missing)))
    return {v: weights.get(v, 0) for v in g.vertices}
