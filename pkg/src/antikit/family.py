"""Set families over a recorded ground set, plus their text and JSON forms.

Text format: one set per line, elements separated by spaces, the empty set
written ``-``.  An optional ``ground: ...`` line fixes the ground set;
without it the ground set is the union of the listed sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator

from .errors import FormatError, UnknownVertex


def set_key(s: Iterable) -> tuple:
    """Sort key for sets: by size, then by the sorted tuple of elements."""
    items = tuple(sorted(s))
    return (len(items), items)


def sorted_sets(sets: Iterable[Iterable]) -> list[frozenset]:
    return sorted((frozenset(s) for s in sets), key=set_key)


@dataclass(frozen=True)
class SetFamily:
    ground: frozenset
    sets: frozenset = frozenset()
    _ordered: tuple = field(init=False, repr=False, compare=False, default=())

    def __post_init__(self):
        ground = frozenset(self.ground)
        sets = frozenset(frozenset(s) for s in self.sets)
        for s in sets:
            if not s <= ground:
                raise UnknownVertex(
                    f"set {sorted(s)} has elements {sorted(s - ground)} outside the ground set"
                )
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "sets", sets)
        object.__setattr__(self, "_ordered", tuple(sorted_sets(sets)))

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[Hashable]], ground: Iterable | None = None) -> "SetFamily":
        sets = [frozenset(s) for s in sets]
        if ground is None:
            ground = frozenset().union(*sets)
        return cls(frozenset(ground), frozenset(sets))

    @classmethod
    def power_set(cls, ground: Iterable) -> "SetFamily":
        ground = sorted(ground)
        n = len(ground)
        sets = (
            frozenset(ground[j] for j in range(n) if mask >> j & 1) for mask in range(1 << n)
        )
        return cls(frozenset(ground), frozenset(sets))

    def __iter__(self) -> Iterator[frozenset]:
        return iter(self._ordered)

    def __len__(self):
        return len(self.sets)

    def __contains__(self, s):
        return frozenset(s) in self.sets

    def is_power_set(self) -> bool:
        return len(self.sets) == 1 << len(self.ground)

    def filter(self, predicate) -> "SetFamily":
        return SetFamily(self.ground, frozenset(s for s in self.sets if predicate(s)))

    def to_text(self) -> str:
        return "".join(format_set(s) + "\n" for s in self)

    def to_json(self) -> dict:
        return {"ground": sorted(self.ground), "sets": [sorted(s) for s in self]}

    @classmethod
    def from_json(cls, data: dict) -> "SetFamily":
        try:
            return cls(frozenset(data["ground"]), frozenset(frozenset(s) for s in data["sets"]))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"malformed family JSON: {exc}") from None


def format_set(s: Iterable) -> str:
    items = sorted(s)
    return " ".join(map(str, items)) if items else "-"


def parse_id(token: str, where: str = "") -> int:
    try:
        value = int(token)
    except ValueError:
        raise FormatError(f"{where}{token!r} is not an integer id") from None
    if value < 0:
        raise FormatError(f"{where}id {value} is negative")
    return value


def parse_set_tokens(tokens: Iterable[str], where: str = "") -> frozenset[int]:
    tokens = list(tokens)
    if tokens == ["-"]:
        return frozenset()
    if "-" in tokens:
        raise FormatError(f"{where}'-' (the empty set) cannot be combined with ids")
    ids = [parse_id(t, where) for t in tokens]
    if len(set(ids)) != len(ids):
        raise FormatError(f"{where}repeated id in set")
    return frozenset(ids)


def parse_family(text: str) -> SetFamily:
    ground = None
    sets = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}: "
        if line.startswith("ground:"):
            if ground is not None:
                raise FormatError(f"{where}duplicate ground: line")
            ground = parse_set_tokens(line[len("ground:"):].split() or ["-"], where)
            continue
        sets.append(parse_set_tokens(line.split(), where))
    return SetFamily.from_sets(sets, ground)


# -- bitmask helpers used by the brute-force routines ----------------------


def index_of(ground: Iterable) -> tuple[list, dict]:
    order = sorted(ground)
    return order, {v: j for j, v in enumerate(order)}


def to_mask(s: Iterable, index: dict) -> int:
    mask = 0
    for v in s:
        mask |= 1 << index[v]
    return mask


def from_mask(mask: int, order: list) -> frozenset:
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(order[j])
        mask >>= 1
        j += 1
    return frozenset(out)
