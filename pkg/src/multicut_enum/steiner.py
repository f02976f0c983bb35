"""Hypergraph transversals versus Steiner node multicuts on split graphs.

A hypergraph on universe ``0..u-1`` becomes a graph with a clique on the
universe plus, for every hyperedge ``e`` and every ``v`` in ``e``, a pendant
vertex attached to ``v``.  The pendants of ``e`` form one terminal group.
A universe subset is a transversal iff it splits some pair in every group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphFormatError
from .oracle import GUARD_BITS, OracleGuardError, OracleKind, brute_force_enumerate


class HypergraphError(ValueError):
    pass


@dataclass(frozen=True)
class Hypergraph:
    universe: int
    edges: tuple[frozenset[int], ...]

    def __init__(self, universe: int, edges: Iterable[Iterable[int]]):
        norm = []
        seen = set()
        for e in edges:
            fe = frozenset(int(x) for x in e)
            if not fe:
                raise HypergraphError("hyperedges must be nonempty")
            if len(fe) < 2:
                raise HypergraphError(
                    f"hyperedge {sorted(fe)} has one vertex; its pendant group has no pair to split"
                )
            if any(not 0 <= x < universe for x in fe):
                raise HypergraphError(f"hyperedge {sorted(fe)} leaves the universe 0..{universe - 1}")
            if fe not in seen:
                seen.add(fe)
                norm.append(fe)
        object.__setattr__(self, "universe", int(universe))
        object.__setattr__(self, "edges", tuple(norm))


def parse_hypergraph(text: str) -> Hypergraph:
    """``|U| |E|`` header, then one line of member ids per hyperedge."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphFormatError("empty hypergraph file")
    try:
        nums = [[int(x) for x in r] for r in rows]
    except ValueError as exc:
        raise GraphFormatError(f"non-integer token: {exc}") from None
    if len(nums[0]) != 2:
        raise GraphFormatError("header must be '|U| |E|'")
    u, m = nums[0]
    if len(nums) - 1 != m:
        raise GraphFormatError(f"header declares {m} hyperedges, found {len(nums) - 1}")
    return Hypergraph(u, nums[1:])


@dataclass(frozen=True)
class SplitGraphReduction:
    graph: Graph
    groups: tuple[frozenset[int], ...]
    universe_vertices: tuple[int, ...]
    pendant: dict[tuple[int, int], int]


def hypergraph_to_split_graph(h: Hypergraph) -> SplitGraphReduction:
    u = h.universe
    edges = [(a, b) for a in range(u) for b in range(a + 1, u)]
    pendant = {}
    groups = []
    nxt = u
    for ei, e in enumerate(h.edges):
        grp = []
        for v in sorted(e):
            pendant[(ei, v)] = nxt
            edges.append((v, nxt))
            grp.append(nxt)
            nxt += 1
        groups.append(frozenset(grp))
    return SplitGraphReduction(Graph(nxt, edges), tuple(groups), tuple(range(u)), pendant)


def brute_force_minimal_steiner_multicuts(g: Graph, groups: Sequence[Iterable[int]]) -> set[frozenset[int]]:
    gs = [frozenset(x) for x in groups]
    for grp in gs:
        if len(grp) < 2:
            raise HypergraphError("every terminal group needs at least two vertices")
    return brute_force_enumerate(g, gs, OracleKind.STEINER_NODE)


def minimal_transversals_brute(h: Hypergraph) -> set[frozenset[int]]:
    if h.universe > GUARD_BITS:
        raise OracleGuardError(f"universe of {h.universe} exceeds 2^{GUARD_BITS}")
    masks = [sum(1 << v for v in e) for e in h.edges]
    hits = [all(mask & em for em in masks) for mask in range(1 << h.universe)]
    out = set()
    for mask in range(1 << h.universe):
        if hits[mask] and not any(hits[mask & ~(1 << i)] for i in range(h.universe) if mask >> i & 1):
            out.add(frozenset(i for i in range(h.universe) if mask >> i & 1))
    return out


def cross_check_transversal_duality(h: Hypergraph) -> bool:
    """Minimal transversals coincide with minimal Steiner multicuts of the split graph."""
    red = hypergraph_to_split_graph(h)
    steiner = brute_force_minimal_steiner_multicuts(red.graph, red.groups)
    back = {frozenset(red.universe_vertices.index(v) for v in s) for s in steiner}
    return back == minimal_transversals_brute(h)
