"""Brute-force reference enumerators and random instance generators.

Every cut predicate here is monotone under taking supersets, so a subset is
inclusion-minimal iff it is a cut and no single-element deletion is one.
The predicates are evaluated for all subsets of the candidate universe in
subset-rank order and cached in a table indexed by bitmask.
"""

from __future__ import annotations

import enum
import random
from typing import Callable, Sequence

from .graph import Graph, norm_edge

GUARD_BITS = 22


class OracleGuardError(ValueError):
    """The candidate universe is too large for exhaustive enumeration."""


class OracleKind(enum.Enum):
    NODE_MULTICUT = "node-multicut"
    EDGE_MULTICUT = "edge-multicut"
    NODE_MULTIWAY = "node-multiway"
    EDGE_MULTIWAY = "edge-multiway"
    STEINER_NODE = "steiner-node"


def _labels(n: int, adj: list[list[int]], removed_v: int = 0, removed_e=None) -> list[int]:
    # component label per vertex, -1 for removed vertices; plain DFS kept
    # independent of the library's traversal code
    lab = [-1] * n
    cur = 0
    for s in range(n):
        if lab[s] != -1 or removed_v >> s & 1:
            continue
        lab[s] = cur
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if lab[y] == -1 and not removed_v >> y & 1:
                    if removed_e is not None and (min(x, y), max(x, y)) in removed_e:
                        continue
                    lab[y] = cur
                    stack.append(y)
        cur += 1
    return lab


def _minimal_subsets(universe: Sequence, is_cut: Callable[[int], bool]) -> list[frozenset]:
    size = len(universe)
    if size > GUARD_BITS:
        raise OracleGuardError(f"candidate universe of {size} elements exceeds 2^{GUARD_BITS}")
    table = [is_cut(mask) for mask in range(1 << size)]
    out = []
    for mask in range(1 << size):
        if not table[mask]:
            continue
        if any(table[mask & ~(1 << i)] for i in range(size) if mask >> i & 1):
            continue
        out.append(frozenset(universe[i] for i in range(size) if mask >> i & 1))
    return out


def _adjacency(g: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _pairs_for(kind: OracleKind, spec) -> list[tuple[int, int]]:
    if kind in (OracleKind.NODE_MULTIWAY, OracleKind.EDGE_MULTIWAY):
        ts = list(spec)
        return [(ts[i], ts[j]) for i in range(len(ts)) for j in range(i + 1, len(ts))]
    return [tuple(p) for p in spec]


def brute_force_enumerate(g: Graph, spec, kind: OracleKind | str) -> set[frozenset]:
    """All inclusion-minimal cuts of the given kind, by exhaustion."""
    kind = OracleKind(kind)
    adj = _adjacency(g)
    if kind is OracleKind.STEINER_NODE:
        groups = [sorted(grp) for grp in spec]
        terms = {v for grp in groups for v in grp}
        universe = [v for v in range(g.n) if v not in terms]

        def steiner_cut(mask: int) -> bool:
            removed = 0
            for i in range(len(universe)):
                if mask >> i & 1:
                    removed |= 1 << universe[i]
            lab = _labels(g.n, adj, removed)
            return all(len({lab[v] for v in grp}) > 1 for grp in groups)

        return set(_minimal_subsets(universe, steiner_cut))

    pairs = _pairs_for(kind, spec)
    terms = {t for p in pairs for t in p}
    if kind in (OracleKind.NODE_MULTICUT, OracleKind.NODE_MULTIWAY):
        universe = [v for v in range(g.n) if v not in terms]

        def node_cut(mask: int) -> bool:
            removed = 0
            for i in range(len(universe)):
                if mask >> i & 1:
                    removed |= 1 << universe[i]
            lab = _labels(g.n, adj, removed)
            return all(lab[s] != lab[t] for s, t in pairs)

        return set(_minimal_subsets(universe, node_cut))

    universe = list(g.edges)

    def edge_cut(mask: int) -> bool:
        removed = {universe[i] for i in range(len(universe)) if mask >> i & 1}
        lab = _labels(g.n, adj, 0, removed)
        return all(lab[s] != lab[t] for s, t in pairs)

    return set(_minimal_subsets(universe, edge_cut))


def brute_force_minimal_ab_separators(g: Graph, a: int, b: int) -> set[frozenset[int]]:
    """Minimal a-b separators as the minimal node multicuts of ``{{a, b}}``."""
    return brute_force_enumerate(g, [(a, b)], OracleKind.NODE_MULTICUT)


def random_connected_graph(n: int, q: float, seed) -> Graph:
    """Random spanning tree plus every other edge independently with prob. ``q``."""
    if not 1 <= n:
        raise ValueError("need at least one vertex")
    if not 0 < q <= 1:
        raise ValueError("edge probability must lie in (0, 1]")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = {norm_edge(order[i], order[rng.randrange(i)]) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < q:
                edges.add((u, v))
    return Graph(n, edges)


def random_pairs(n: int, count: int, rng: random.Random) -> list[tuple[int, int]]:
    """Up to ``count`` distinct random terminal pairs on ``n`` vertices."""
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return sorted(rng.sample(all_pairs, min(count, len(all_pairs))))


def random_terminals(n: int, k: int, rng: random.Random) -> list[int]:
    return rng.sample(range(n), k)
