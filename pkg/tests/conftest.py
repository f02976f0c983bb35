import random

import pytest

from multicut_enum.graph import Graph


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


P3 = path(3)
P5 = path(5)
C4 = cycle(4)
C6 = cycle(6)
STAR3 = Graph(4, [(0, 1), (0, 2), (0, 3)])
K4 = complete(4)
TRIANGLE = complete(3)


def parallel_paths(j, inner):
    """Terminals 0 and 1 joined by ``j`` internally disjoint paths with
    ``inner`` internal vertices each."""
    edges = []
    v = 2
    for _ in range(j):
        prev = 0
        for _ in range(inner):
            edges.append((prev, v))
            prev = v
            v += 1
        edges.append((prev, 1))
    return Graph(v, edges)


def double_star(j):
    """``K_{2,j}``: terminals 0 and 1 both adjacent to ``j`` middle vertices."""
    return Graph(j + 2, [(0, i) for i in range(2, j + 2)] + [(1, i) for i in range(2, j + 2)])


def all_connected_graphs(n):
    """Every connected labelled graph on ``n`` vertices (use only for n <= 5)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        g = Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        if g.connected:
            yield g


def non_adjacent_pairs(g):
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]


def keyset(solutions):
    return {frozenset(s) for s in solutions}


@pytest.fixture
def rng():
    return random.Random(20261018)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
