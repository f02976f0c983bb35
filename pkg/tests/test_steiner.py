import random

import pytest
from hypothesis import given, settings, strategies as st

from multicut_enum.graph import GraphFormatError
from multicut_enum.steiner import (
    Hypergraph,
    HypergraphError,
    brute_force_minimal_steiner_multicuts,
    cross_check_transversal_duality,
    hypergraph_to_split_graph,
    minimal_transversals_brute,
    parse_hypergraph,
)

from conftest import P3

SINGLE = Hypergraph(2, [[0, 1]])
TWO_EDGES = Hypergraph(3, [[0, 1], [1, 2]])


def test_single_edge_construction():
    red = hypergraph_to_split_graph(SINGLE)
    assert red.graph.n == 4
    assert set(red.graph.edges) == {(0, 1), (0, 2), (1, 3)}
    assert red.groups == (frozenset({2, 3}),)
    assert red.pendant == {(0, 0): 2, (0, 1): 3}


def test_two_edge_construction_is_split():
    red = hypergraph_to_split_graph(TWO_EDGES)
    g = red.graph
    assert g.n == 7 and len(red.groups) == 2
    clique = set(red.universe_vertices)
    pendants = set(range(g.n)) - clique
    assert all(g.has_edge(a, b) for a in clique for b in clique if a < b)
    assert not any(g.has_edge(a, b) for a in pendants for b in pendants)
    assert all(len(g.adj[p]) == 1 for p in pendants)


def test_transversals():
    assert minimal_transversals_brute(SINGLE) == {frozenset({0}), frozenset({1})}
    assert minimal_transversals_brute(TWO_EDGES) == {frozenset({1}), frozenset({0, 2})}
    assert minimal_transversals_brute(Hypergraph(3, [])) == {frozenset()}


def test_steiner_side():
    assert brute_force_minimal_steiner_multicuts(P3, [{0, 2}]) == {frozenset({1})}
    red = hypergraph_to_split_graph(TWO_EDGES)
    assert brute_force_minimal_steiner_multicuts(red.graph, red.groups) == {frozenset({1}), frozenset({0, 2})}
    with pytest.raises(HypergraphError):
        brute_force_minimal_steiner_multicuts(P3, [{0}])


def test_named_cross_checks():
    assert cross_check_transversal_duality(SINGLE)
    assert cross_check_transversal_duality(TWO_EDGES)


def test_hypergraph_validation():
    with pytest.raises(HypergraphError):
        Hypergraph(2, [[0]])
    with pytest.raises(HypergraphError):
        Hypergraph(2, [[]])
    with pytest.raises(HypergraphError):
        Hypergraph(2, [[0, 5]])
    assert Hypergraph(3, [[0, 1], [1, 0]]).edges == (frozenset({0, 1}),)


def test_parse():
    h = parse_hypergraph("3 2\n0 1\n1 2\n")
    assert h == TWO_EDGES
    with pytest.raises(GraphFormatError):
        parse_hypergraph("3 3\n0 1\n")
    with pytest.raises(HypergraphError):
        parse_hypergraph("2 1\n0\n")


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(0, 4), st.integers(0, 10**6))
def test_duality_on_random_hypergraphs(u, m, seed):
    rng = random.Random(seed)
    edges = [rng.sample(range(u), rng.randint(2, u)) for _ in range(m)]
    assert cross_check_transversal_duality(Hypergraph(u, edges))
