"""The edge-cover antimatroid used to transfer independent-set hardness.

Ground set: one element per vertex and one per edge of an arbitrary simple
graph.  A set is feasible when each edge element in it comes with at least
one of its endpoints.  Vertex elements weigh ``delta - degree``, edge
elements weigh 1, so any feasible set can be trimmed into an independent
set of at least ``weight / delta`` vertices.

Elements are tuples: ``("v", a)`` for vertex ``a`` and ``("e", a, b)`` with
``a < b`` for edge ``ab``.  Arithmetic is exact (``Fraction``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple

from . import limits
from .errors import DuplicateEdge, FormatError, IllegalEdge, InvalidDelta, NotFeasible, UnknownElement, UnknownVertex
from .family import SetFamily
from .numeric import exact
from .split_graph import parse_sections

DEFAULT_DELTA = Fraction(1, 10)


class SimpleGraph(NamedTuple):
    vertices: tuple
    edges: tuple  # sorted pairs (a, b), a < b


def vertex_element(a) -> tuple:
    return ("v", a)


def edge_element(a, b) -> tuple:
    return ("e",) + tuple(sorted((a, b)))


def is_vertex_element(x) -> bool:
    return x[0] == "v"


def element_str(x) -> str:
    return str(x[1]) if x[0] == "v" else f"{x[1]}-{x[2]}"


def simple_graph(vertices: Iterable, edges: Iterable) -> SimpleGraph:
    vertices = tuple(sorted(vertices))
    known = set(vertices)
    if len(known) != len(vertices):
        raise FormatError("a vertex is listed twice")
    seen = set()
    for a, b in edges:
        for v in (a, b):
            if v not in known:
                raise UnknownVertex(f"edge {a}-{b} uses unknown vertex {v}")
        if a == b:
            raise IllegalEdge(f"self-loop {a}-{b}")
        pair = tuple(sorted((a, b)))
        if pair in seen:
            raise DuplicateEdge(f"edge {a}-{b} is listed twice")
        seen.add(pair)
    return SimpleGraph(vertices, tuple(sorted(seen)))


def _as_simple_graph(graph) -> SimpleGraph:
    if isinstance(graph, SimpleGraph):
        return graph
    if hasattr(graph, "nodes") and hasattr(graph, "edges") and callable(graph.nodes):
        return simple_graph(graph.nodes(), graph.edges())
    vertices, edges = graph
    return simple_graph(vertices, edges)


@dataclass(frozen=True)
class ReductionInstance:
    graph: SimpleGraph
    delta: Fraction
    weights: dict

    @property
    def ground(self) -> frozenset:
        return frozenset(self.weights)

    @property
    def vertex_elements(self) -> list:
        return [vertex_element(a) for a in self.graph.vertices]

    @property
    def edge_elements(self) -> list:
        return [edge_element(a, b) for a, b in self.graph.edges]

    def weight(self, f: Iterable) -> Fraction:
        return sum((self.weights[x] for x in f), Fraction(0))

    def _check(self, f) -> frozenset:
        f = frozenset(f)
        unknown = f - self.weights.keys()
        if unknown:
            raise UnknownElement(
                f"elements {sorted(element_str(x) for x in unknown)} are not in the ground set"
            )
        return f


def build_reduction(graph, delta=DEFAULT_DELTA) -> ReductionInstance:
    """Edge-cover antimatroid of ``graph`` with weights ``delta - d(v)`` and 1."""
    graph = _as_simple_graph(graph)
    try:
        delta = exact(delta)
    except (TypeError, ValueError, FormatError):
        raise InvalidDelta(f"delta must be a number, got {delta!r}") from None
    if not 0 < delta < 1:
        raise InvalidDelta(f"delta must lie strictly between 0 and 1, got {delta}")
    degree = {a: 0 for a in graph.vertices}
    for a, b in graph.edges:
        degree[a] += 1
        degree[b] += 1
    weights = {vertex_element(a): delta - degree[a] for a in graph.vertices}
    weights.update({edge_element(a, b): Fraction(1) for a, b in graph.edges})
    return ReductionInstance(graph, Fraction(delta), weights)


def is_feasible_reduction(inst: ReductionInstance, f: Iterable) -> bool:
    f = inst._check(f)
    return all(
        ("v", x[1]) in f or ("v", x[2]) in f for x in f if x[0] == "e"
    )


def extract_independent_set(inst: ReductionInstance, f: Iterable) -> tuple[frozenset, frozenset]:
    """Trim a feasible set until its vertices are independent.

    Repeatedly takes the lexicographically smallest adjacent pair ``(u, v)``
    still present, drops ``u`` and every edge element on ``u`` whose other
    end is gone.  Returns the trimmed set and its vertices; the weight never
    decreases, and ends at most ``delta`` times the number of vertices.
    """
    f = inst._check(f)
    if not is_feasible_reduction(inst, f):
        raise NotFeasible("the set leaves an edge element without either endpoint")
    current = set(f)
    while True:
        pair = next(
            ((a, b) for a, b in inst.graph.edges if ("v", a) in current and ("v", b) in current),
            None,
        )
        if pair is None:
            break
        u = pair[0]
        current.discard(("v", u))
        for x in [x for x in current if x[0] == "e" and u in x[1:]]:
            other = x[2] if x[1] == u else x[1]
            if ("v", other) not in current:
                current.discard(x)
    trimmed = frozenset(current)
    return trimmed, frozenset(x[1] for x in trimmed if x[0] == "v")


def reduction_path_poset(inst: ReductionInstance) -> list[frozenset]:
    paths = [frozenset({vertex_element(a)}) for a in inst.graph.vertices]
    for a, b in inst.graph.edges:
        e = edge_element(a, b)
        paths.append(frozenset({vertex_element(a), e}))
        paths.append(frozenset({vertex_element(b), e}))
    return paths


def reduction_family(inst: ReductionInstance) -> SetFamily:
    """Every feasible set of the instance (exponential in |V| + |E|)."""
    order = sorted(inst.ground)
    n = len(order)
    limits.check_size(n, limits.enumeration_limit(), "reduction_family")
    index = {x: j for j, x in enumerate(order)}
    # (edge bit, endpoint bits) pairs
    rules = [
        (1 << index[x], (1 << index[("v", x[1])]) | (1 << index[("v", x[2])]))
        for x in order
        if x[0] == "e"
    ]
    sets = []
    for mask in range(1 << n):
        if all(not mask & e or mask & ends for e, ends in rules):
            sets.append(frozenset(order[j] for j in range(n) if mask >> j & 1))
    return SetFamily(frozenset(order), frozenset(sets))


def max_feasible_weight(inst: ReductionInstance) -> Fraction:
    """Exact maximum weight of a feasible set.

    Enumerates the vertex part ``S`` only: edge elements weigh 1, so the
    best completion of ``S`` takes every edge touching ``S`` (and no other
    edge is allowed).
    """
    vertices = inst.graph.vertices
    n = len(vertices)
    limits.check_size(n, limits.enumeration_limit(), "max_feasible_weight")
    index = {a: j for j, a in enumerate(vertices)}
    adj = [0] * n
    for a, b in inst.graph.edges:
        adj[index[a]] |= 1 << index[b]
        adj[index[b]] |= 1 << index[a]
    m = len(inst.graph.edges)
    vw = [inst.weights[vertex_element(a)] for a in vertices]
    scale = lcm(*(w.denominator for w in vw)) if vw else 1
    iw = [int(w * scale) for w in vw]
    full = (1 << n) - 1
    inside = [0] * (1 << n)  # edges with both ends in the subset
    wsum = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        j = low.bit_length() - 1
        rest = s ^ low
        inside[s] = inside[rest] + (adj[j] & rest).bit_count()
        wsum[s] = wsum[rest] + iw[j]
    best = max(wsum[s] + scale * (m - inside[full ^ s]) for s in range(1 << n))
    return Fraction(best, scale)


def max_independent_set_size(graph) -> int:
    graph = _as_simple_graph(graph)
    vertices = graph.vertices
    n = len(vertices)
    limits.check_size(n, limits.enumeration_limit(), "max_independent_set_size")
    index = {a: j for j, a in enumerate(vertices)}
    adj = [0] * n
    for a, b in graph.edges:
        adj[index[a]] |= 1 << index[b]
        adj[index[b]] |= 1 << index[a]
    best = 0
    independent = [True] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        independent[s] = independent[rest] and not adj[low.bit_length() - 1] & rest
        if independent[s]:
            best = max(best, s.bit_count())
    return best


# -- generic graph text format ---------------------------------------------
#
#   V: a b c
#   E: a-b b-c


def parse_simple_graph(text: str) -> SimpleGraph:
    sections = parse_sections(text, ("V", "E"), ("V",))
    tokens = [t for t, _ in sections["V"]]
    for t, lineno in sections["V"]:
        if "-" in t:
            raise FormatError(f"line {lineno}: vertex label {t!r} may not contain '-'")
    numeric = all(t.isdigit() for t in tokens)
    convert = int if numeric else str
    edges = []
    for t, lineno in sections.get("E", []):
        parts = t.split("-")
        if len(parts) != 2 or not all(parts):
            raise FormatError(f"line {lineno}: malformed edge {t!r}, expected a-b")
        if numeric and not all(p.isdigit() for p in parts):
            raise UnknownVertex(f"line {lineno}: edge {t!r} uses an unknown vertex")
        edges.append((convert(parts[0]), convert(parts[1])))
    return simple_graph([convert(t) for t in tokens], edges)


def parse_element(token: str, graph: SimpleGraph):
    numeric = all(isinstance(v, int) for v in graph.vertices)
    convert = int if numeric else str
    try:
        if "-" in token:
            a, b = token.split("-")
            return edge_element(convert(a), convert(b))
        return vertex_element(convert(token))
    except ValueError:
        raise FormatError(f"cannot read element {token!r}") from None
