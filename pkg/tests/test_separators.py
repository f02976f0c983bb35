import itertools

import pytest
from hypothesis import given, settings, strategies as st

from multicut_enum.graph import Graph
from multicut_enum.instrument import counting
from multicut_enum.oracle import brute_force_minimal_ab_separators, random_connected_graph
from multicut_enum.separators import (
    NoSeparatorError,
    SeparatorInstance,
    enumerate_minimal_ab_separators,
    is_minimal_ab_separator,
)

from conftest import C4, P5, keyset, non_adjacent_pairs, parallel_paths


def test_path_separators():
    got = list(enumerate_minimal_ab_separators(SeparatorInstance(P5, 0, 4)))
    assert keyset(got) == {frozenset({1}), frozenset({2}), frozenset({3})}
    assert len(got) == 3


def test_chorded_path_order():
    g = Graph(5, list(P5.edges) + [(1, 3)])
    got = list(enumerate_minimal_ab_separators(SeparatorInstance(g, 0, 4)))
    assert got == [frozenset({1}), frozenset({3})]


def test_cycle():
    got = keyset(enumerate_minimal_ab_separators(SeparatorInstance(C4, 0, 2)))
    assert got == {frozenset({1, 3})}


def test_adjacent_endpoints_raise():
    with pytest.raises(NoSeparatorError):
        enumerate_minimal_ab_separators(SeparatorInstance(P5, 1, 2))


def test_instance_validation():
    with pytest.raises(ValueError):
        SeparatorInstance(P5, 0, 0)
    with pytest.raises(ValueError):
        SeparatorInstance(P5, 0, 9)


def test_full_component_check():
    inst = SeparatorInstance(P5, 0, 4)
    assert is_minimal_ab_separator(inst, {2})
    assert not is_minimal_ab_separator(inst, {1, 2})
    assert not is_minimal_ab_separator(inst, set())
    assert not is_minimal_ab_separator(inst, {0})


def test_parallel_paths_count():
    g = parallel_paths(4, 2)
    got = list(enumerate_minimal_ab_separators(SeparatorInstance(g, 0, 1)))
    assert len(got) == 16 and len(keyset(got)) == 16


def test_first_output_is_cheap():
    # 2^j separators exist; the first one must not cost time proportional to them
    costs = []
    for j in (6, 8, 10):
        g = parallel_paths(j, 2)
        with counting() as c:
            first = next(iter(enumerate_minimal_ab_separators(SeparatorInstance(g, 0, 1))))
            costs.append(c.ops)
        assert is_minimal_ab_separator(SeparatorInstance(g, 0, 1), first)
    assert costs[-1] < 20 * costs[0]


def test_all_graphs_on_five_vertices():
    from conftest import all_connected_graphs

    for g in itertools.islice(all_connected_graphs(5), 0, None, 7):
        for a, b in non_adjacent_pairs(g):
            got = list(enumerate_minimal_ab_separators(SeparatorInstance(g, a, b)))
            assert len(got) == len(set(got))
            assert set(got) == brute_force_minimal_ab_separators(g, a, b)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 8), st.floats(0.1, 0.7), st.integers(0, 10**6))
def test_every_output_is_minimal(n, q, seed):
    g = random_connected_graph(n, q, seed)
    for a, b in non_adjacent_pairs(g):
        inst = SeparatorInstance(g, a, b)
        for s in enumerate_minimal_ab_separators(inst):
            assert is_minimal_ab_separator(inst, s)
