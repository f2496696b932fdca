"""Height-two posets and their filters.

The order is stored as its cover pairs ``(u, v)`` meaning ``u ≺ v``.  At
height two the covers are the whole strict order, but the filter test below
only ever walks covers, which is enough for any poset: a set closed upward
along covers is closed upward along their transitive closure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from . import limits
from .errors import InputError, UnknownVertex
from .family import SetFamily, from_mask, index_of, to_mask
from .split_graph import SplitGraph


@dataclass(frozen=True)
class Poset:
    ground: tuple
    covers: frozenset = frozenset()
    _up: Mapping = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        ground = tuple(sorted(set(self.ground)))
        covers = frozenset(tuple(c) for c in self.covers)
        members = set(ground)
        up: dict = {v: set() for v in ground}
        for u, v in covers:
            if u not in members or v not in members:
                raise UnknownVertex(f"cover ({u}, {v}) leaves the ground set")
            if u == v:
                raise InputError(f"cover ({u}, {v}) is reflexive")
            up[u].add(v)
        lows = {u for u, _ in covers}
        highs = {v for _, v in covers}
        if lows & highs:
            raise InputError(f"elements {sorted(lows & highs)} sit in the middle of a chain; height must be at most two")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "covers", covers)
        object.__setattr__(self, "_up", {v: frozenset(s) for v, s in up.items()})

    def up(self, u) -> frozenset:
        """Elements strictly above ``u``."""
        try:
            return self._up[u]
        except KeyError:
            raise UnknownVertex(f"{u} is not in the poset") from None

    def _check(self, s) -> frozenset:
        s = frozenset(s)
        unknown = s - self._up.keys()
        if unknown:
            raise UnknownVertex(f"elements {sorted(unknown)} are not in the poset")
        return s


def build_prec(g: SplitGraph) -> Poset:
    """``k ≺ i`` for every clique vertex ``k`` adjacent to an independent vertex ``i``."""
    return Poset(g.vertices, g.cross_edges)


def restrict(p: Poset, s: Iterable) -> Poset:
    s = p._check(s)
    covers = frozenset((u, v) for u in s for v in p.up(u) if v in s)
    return Poset(tuple(s), covers)


def is_filter(p: Poset, s: Iterable) -> bool:
    s = p._check(s)
    return all(p.up(u) <= s for u in s)


def upward_closure(p: Poset, s: Iterable) -> frozenset:
    s = p._check(s)
    out = set(s)
    stack = list(s)
    while stack:
        for v in p.up(stack.pop()):
            if v not in out:
                out.add(v)
                stack.append(v)
    return frozenset(out)


def enumerate_filters(p: Poset) -> SetFamily:
    """All filters, sorted by size then elements.

    Picks any set ``T`` of elements with nothing above them, then any set of
    lower elements whose up-sets lie inside ``T``.
    """
    limits.check_size(len(p.ground), limits.enumeration_limit(), "enumerate_filters")
    lower = [u for u in p.ground if p.up(u)]
    upper = [v for v in p.ground if not p.up(v)]
    order, index = index_of(p.ground)
    upper_masks = [1 << index[v] for v in upper]
    lower_req = [(1 << index[u], to_mask(p.up(u), index)) for u in lower]
    found = []
    for t in range(1 << len(upper)):
        top = 0
        for j, bit in enumerate(upper_masks):
            if t >> j & 1:
                top |= bit
        allowed = [bit for bit, need in lower_req if need & ~top == 0]
        for r in range(len(allowed) + 1):
            for combo in combinations(allowed, r):
                mask = top
                for bit in combo:
                    mask |= bit
                found.append(mask)
    return SetFamily(frozenset(order), frozenset(from_mask(m, order) for m in found))
