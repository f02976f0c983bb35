import pytest
from hypothesis import given, settings, strategies as st

from multicut_enum.graph import (
    Graph,
    GraphFormatError,
    articulation_points,
    component_of,
    components_minus_edges,
    components_minus_vertices,
    components_within,
    contract_set,
    format_graph,
    induced_subgraph,
    line_graph_expand,
    neighbors_of_set,
    parse_graph,
)
from multicut_enum.oracle import random_connected_graph

from conftest import C4, K4, P3, P5, STAR3, cycle, path


def test_parse_round_trip():
    g = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n")
    assert g == C4
    assert parse_graph(format_graph(g)) == g


def test_parse_skips_comments_and_blank_lines():
    assert parse_graph("# path\n3 2\n\n0 1\n1 2\n") == P3


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n0 1\n",
        "3 2\n0 1\n",
        "3 1\n0 0\n",
        "3 2\n0 1\n1 0\n",
        "3 1\n0 5\n",
        "3 1\n0 x\n",
        "3 1\n0 1 2\n",
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_parse_disconnected():
    with pytest.raises(GraphFormatError):
        parse_graph("4 2\n0 1\n2 3\n")
    g = parse_graph("4 2\n0 1\n2 3\n", require_connected=False)
    assert not g.connected


def test_adjacency_sorted_and_edges_normalized():
    g = Graph(3, [(2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2))
    assert g.adj[0] == (1, 2)
    assert g.neighbors(0) == {1, 2}
    assert g.has_edge(2, 0) and not g.has_edge(1, 2)


def test_components():
    assert component_of(P5, 0, {2}) == {0, 1}
    assert components_minus_vertices(P5, {2}) == [frozenset({0, 1}), frozenset({3, 4})]
    assert components_within(C4, {0, 2, 3}) == [frozenset({0, 3, 2})]
    assert components_minus_edges(C4, [(0, 1), (2, 3)]) == [frozenset({0, 3}), frozenset({1, 2})]
    assert neighbors_of_set(P5, {1, 2}) == {0, 3}


def test_articulation_points():
    assert articulation_points(P5) == {1, 2, 3}
    assert articulation_points(C4) == frozenset()
    assert articulation_points(STAR3) == {0}
    assert articulation_points(P5, within={0, 1, 2}) == {1}
    with pytest.raises(ValueError):
        articulation_points(Graph(3, [(0, 1)]))


def test_induced_and_contract():
    h, old = induced_subgraph(C4, {0, 1, 2})
    assert old == [0, 1, 2] and h == P3
    g2, mapping = contract_set(C4, {1, 3})
    assert mapping == [0, 1, 2, 1]
    assert g2 == Graph(3, [(0, 1), (1, 2)])


def test_line_graph_expand_path():
    g2, pairs2, ev, tv = line_graph_expand(P3, [(0, 2)])
    assert ev == {(0, 1): 0, (1, 2): 1}
    assert tv == {0: 2, 2: 3}
    assert pairs2 == [(2, 3)]
    assert g2 == Graph(4, [(0, 1), (0, 2), (1, 3)])


def _brute_cut_vertices(g, within):
    base = len(components_within(g, within))
    return {v for v in within if len(components_within(g, set(within) - {v})) > base}


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.floats(0.05, 0.8), st.integers(0, 10**6))
def test_articulation_points_match_brute_force(n, q, seed):
    g = random_connected_graph(n, q, seed)
    assert articulation_points(g) == _brute_cut_vertices(g, set(range(n)))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.floats(0.05, 0.8), st.integers(0, 10**6))
def test_components_partition_the_remaining_vertices(n, q, seed):
    g = random_connected_graph(n, q, seed)
    removed = {v for v in range(n) if (seed >> v) & 1}
    comps = components_minus_vertices(g, removed)
    assert set().union(*comps) == set(range(n)) - removed if comps else removed == set(range(n))
    assert sum(len(c) for c in comps) == n - len(removed)
    for c in comps:
        assert not neighbors_of_set(g, c) - removed - c


def test_fixture_shapes():
    assert K4.m == 6 and cycle(6).m == 6 and path(5) == P5
