from __future__ import annotations

from fractions import Fraction

import networkx as nx
import pytest

from antikit import (
    build_reduction,
    extract_independent_set,
    is_feasible_reduction,
    max_feasible_weight,
    reduction_path_poset,
    verify_antimatroid,
)
from antikit.errors import FormatError, InvalidDelta, NotFeasible, UnknownElement, UnknownVertex
from antikit.hardness import (
    DEFAULT_DELTA,
    edge_element,
    max_independent_set_size,
    parse_element,
    parse_simple_graph,
    reduction_family,
    simple_graph,
    vertex_element,
)

from corpora import small_graphs

TRIANGLE = simple_graph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
PATH = simple_graph("abc", [("a", "b"), ("b", "c")])
V, E = vertex_element, edge_element


def test_triangle_weights():
    inst = build_reduction(TRIANGLE)
    assert inst.delta == DEFAULT_DELTA == Fraction(1, 10)
    assert len(inst.ground) == 6
    assert all(inst.weights[x] == Fraction(-19, 10) for x in inst.vertex_elements)
    assert all(inst.weights[x] == 1 for x in inst.edge_elements)


def test_edgeless_graph():
    inst = build_reduction(nx.empty_graph(4))
    assert all(w == Fraction(1, 10) for w in inst.weights.values())
    assert len(reduction_family(inst)) == 16


def test_single_edge():
    inst = build_reduction(simple_graph("ab", [("a", "b")]))
    assert inst.weights == {V("a"): Fraction(-9, 10), V("b"): Fraction(-9, 10), E("a", "b"): 1}
    assert sorted(map(sorted, reduction_path_poset(inst))) == sorted(
        map(sorted, [{V("a")}, {V("b")}, {V("a"), E("a", "b")}, {V("b"), E("a", "b")}])
    )


@pytest.mark.parametrize("delta", [0, 1, -0.5, 2, "x"])
def test_invalid_delta(delta):
    with pytest.raises(InvalidDelta):
        build_reduction(TRIANGLE, delta)


def test_delta_as_float_is_exact():
    assert build_reduction(TRIANGLE, 0.25).delta == Fraction(1, 4)


def test_feasibility_rule():
    inst = build_reduction(TRIANGLE)
    assert is_feasible_reduction(inst, {V("a"), E("a", "b"), E("a", "c")})
    assert not is_feasible_reduction(inst, {E("a", "b")})
    assert is_feasible_reduction(inst, set())
    with pytest.raises(UnknownElement):
        is_feasible_reduction(inst, {V("z")})


def test_extract_triangle():
    inst = build_reduction(TRIANGLE)
    f = inst.ground
    assert inst.weight(f) == Fraction(-27, 10)
    trimmed, indep = extract_independent_set(inst, f)
    assert len(indep) == 1
    assert inst.weight(f) <= inst.delta * len(indep)
    assert is_feasible_reduction(inst, trimmed)


def test_extract_equality_case():
    inst = build_reduction(PATH)
    f = {V("a"), V("c"), E("a", "b"), E("b", "c")}
    trimmed, indep = extract_independent_set(inst, f)
    assert trimmed == f and indep == {"a", "c"}
    assert inst.weight(f) == Fraction(1, 5) == inst.delta * 2


def test_extract_refuses_infeasible():
    inst = build_reduction(PATH)
    with pytest.raises(NotFeasible):
        extract_independent_set(inst, {E("a", "b")})


def test_extract_removes_smaller_endpoint_first():
    inst = build_reduction(PATH)
    trimmed, indep = extract_independent_set(inst, {V("a"), V("b"), E("a", "b")})
    assert indep == {"b"} and trimmed == {V("b"), E("a", "b")}


def test_path_poset_sizes():
    assert len(reduction_path_poset(build_reduction(TRIANGLE))) == 9
    assert len(reduction_path_poset(build_reduction(nx.empty_graph(5)))) == 5


@pytest.mark.parametrize("graph", small_graphs(9), ids=lambda g: f"n{len(g)}m{g.number_of_edges()}")
def test_small_graph_laws(graph):
    inst = build_reduction(graph)
    fam = reduction_family(inst)
    assert verify_antimatroid(fam)
    assert all(is_feasible_reduction(inst, f) for f in fam)
    for f in fam:
        trimmed, indep = extract_independent_set(inst, f)
        assert inst.delta * len(indep) >= inst.weight(f)
        assert not any(graph.has_edge(a, b) for a in indep for b in indep)
    best = max(inst.weight(f) for f in fam)
    assert best == max_feasible_weight(inst)
    assert best / inst.delta == max_independent_set_size(graph)


def test_max_independent_set_size():
    assert max_independent_set_size(nx.cycle_graph(5)) == 2
    assert max_independent_set_size(nx.petersen_graph()) == 4
    assert max_independent_set_size(nx.empty_graph(3)) == 3


def test_parse_simple_graph():
    g = parse_simple_graph("V: a b c\nE: a-b b-c\n")
    assert g == simple_graph("abc", [("a", "b"), ("b", "c")])
    g = parse_simple_graph("V: 1 2 10\nE: 10-1\n")
    assert g.vertices == (1, 2, 10) and g.edges == ((1, 10),)
    assert parse_element("1-10", g) == E(1, 10)
    assert parse_element("2", g) == V(2)


@pytest.mark.parametrize(
    "text, error",
    [
        ("E: a-b\n", FormatError),
        ("V: a b\nE: a-c\n", UnknownVertex),
        ("V: a b\nE: ab\n", FormatError),
        ("V: a a\n", FormatError),
    ],
)
def test_parse_simple_graph_errors(text, error):
    with pytest.raises(error):
        parse_simple_graph(text)
