"""Incremental-polynomial enumeration of minimal node multicuts, and minimal
edge multicuts through the line-graph reduction.

The instance is first reduced: adjacent terminals that are not paired are
merged, and any vertex whose neighborhood holds a whole terminal pair is
forced into every solution and deleted.  The reduced instance is then
traversed breadth-first over its solution graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import (
    Edge,
    Graph,
    components_minus_vertices,
    contract_set,
    induced_subgraph,
    line_graph_expand,
    neighbors_of_set,
)
from .instrument import tick
from .separators import SeparatorInstance, enumerate_minimal_ab_separators
from .solutions import (
    TerminalPairs,
    canonical_key,
    comp_minimalize_multicut,
    component_family,
    is_node_multicut,
)


@dataclass(frozen=True)
class Infeasible:
    """No node multicut exists (some terminal pair is adjacent)."""

    reason: str


@dataclass(frozen=True)
class MulticutInstance:
    """A reduced instance plus what is needed to translate solutions back.

    ``to_original[v]`` is the original id of reduced vertex ``v``; it is only
    meaningful for non-terminals, which are never merged.
    """

    graph: Graph
    pairs: TerminalPairs
    forced: frozenset[int]
    to_original: tuple[int, ...]

    def lift(self, m: Iterable[int]) -> frozenset[int]:
        return frozenset(self.to_original[v] for v in m) | self.forced


def preprocess(g: Graph, pairs) -> MulticutInstance | Infeasible:
    b = pairs if isinstance(pairs, TerminalPairs) else TerminalPairs(pairs)
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    cur = set(b.pairs)
    forced: set[int] = set()

    def terminals() -> set[int]:
        return {t for p in cur for t in p}

    while True:
        ts = terminals()
        for s, t in cur:
            if t in adj[s]:
                return Infeasible(f"terminal pair ({s}, {t}) is adjacent")
        # merge adjacent terminals that are not paired
        merge = next(((u, w) for u in sorted(ts) for w in sorted(adj[u] & ts) if u < w), None)
        if merge is not None:
            keep, gone = merge
            for w in adj.pop(gone):
                adj[w].discard(gone)
                if w != keep:
                    adj[w].add(keep)
                    adj[keep].add(w)
            adj[keep].discard(keep)
            cur = {tuple(sorted(keep if x == gone else x for x in p)) for p in cur}
            continue
        # delete vertices whose neighborhood contains a full pair
        hit = next(
            (v for v in sorted(adj) if any(s in adj[v] and t in adj[v] for s, t in cur)),
            None,
        )
        if hit is not None:
            if hit in ts:
                return Infeasible(f"terminal {hit} is adjacent to both ends of a pair")
            forced.add(hit)
            for w in adj.pop(hit):
                adj[w].discard(hit)
            continue
        break

    old = sorted(adj)
    index = {v: i for i, v in enumerate(old)}
    edges = {(index[u], index[w]) for u in old for w in adj[u] if u < w}
    reduced = Graph(len(old), edges)
    rpairs = TerminalPairs((index[s], index[t]) for s, t in cur)
    return MulticutInstance(reduced, rpairs, frozenset(forced), tuple(old))


@dataclass(frozen=True)
class AbsepSubinstance:
    """Separator sub-instance ``(H', v, v_t)`` and the map back into ``G``."""

    separator: SeparatorInstance
    to_host: tuple[int, ...]
    identified: frozenset[int]


class NoPairInRegionError(ValueError):
    """The region ``N[v] + C`` holds no terminal pair; no sub-instance exists."""


def build_absep_subinstance(g: Graph, pairs, m, c: Iterable[int], v: int) -> AbsepSubinstance:
    """Build ``H'`` from ``H = G[C + v]`` by identifying the partners of
    ``v``'s terminal neighbors that lie in ``C`` into one vertex ``v_t``.

    Vertices of ``H'`` other than ``v_t`` map back to their ids in ``g``;
    ``v_t`` maps to -1.
    """
    b = pairs if isinstance(pairs, TerminalPairs) else TerminalPairs(pairs)
    cs = frozenset(c)
    tv = g.neighbors(v) & b.terminals
    targets = frozenset(t for s in tv for t in b.partners[s] if t in cs)
    if not targets:
        raise NoPairInRegionError("G[N[v] + C] contains no terminal pair")
    h, old = induced_subgraph(g, cs | {v})
    local = {x: i for i, x in enumerate(old)}
    h2, mapping = contract_set(h, [local[t] for t in targets])
    to_host = [-1] * h2.n
    for i, x in enumerate(old):
        if x not in targets:
            to_host[mapping[i]] = x
    vt = mapping[local[min(targets)]]
    return AbsepSubinstance(SeparatorInstance(h2, mapping[local[v]], vt), tuple(to_host), targets)


def neighborhood_multicut(inst: MulticutInstance, m: Iterable[int]) -> Iterator[frozenset[int]]:
    """Lazily yield the solution-graph neighbors of the minimal multicut ``m``."""
    g, b = inst.graph, inst.pairs
    ms = frozenset(m)
    terms = b.terminals
    for c, _ in component_family(g, b, ms):
        for v in sorted(ms):
            nb = g.neighbors(v)
            tick(len(nb))
            if nb.isdisjoint(c):
                continue
            tv = nb & terms
            base = (ms - {v}) | (neighbors_of_set(g, tv | {v}) - c)
            if not b.has_pair_within(c | nb | {v}):
                if is_node_multicut(g, b, base):
                    yield comp_minimalize_multicut(g, b, base)
                continue
            sub = build_absep_subinstance(g, b, ms, c, v)
            for sep in enumerate_minimal_ab_separators(sub.separator):
                lifted = frozenset(sub.to_host[x] for x in sep)
                if lifted & terms:
                    continue
                cand = base | lifted
                if is_node_multicut(g, b, cand):
                    yield comp_minimalize_multicut(g, b, cand)


def initial_multicut(inst: MulticutInstance) -> frozenset[int]:
    g, b = inst.graph, inst.pairs
    return comp_minimalize_multicut(g, b, frozenset(range(g.n)) - b.terminals)


def enumerate_minimal_node_multicuts(g: Graph, pairs) -> Iterator[frozenset[int]]:
    """Yield every minimal node multicut of ``(g, pairs)`` exactly once.

    Yields nothing when the instance is infeasible; call :func:`preprocess`
    to distinguish that from an empty result.
    """
    inst = preprocess(g, pairs)
    if isinstance(inst, Infeasible):
        return
    yield from _traverse(inst)


def _traverse(inst: MulticutInstance) -> Iterator[frozenset[int]]:
    start = initial_multicut(inst)
    out = inst.lift(start)
    seen = {canonical_key(out)}
    queue = deque([start])
    yield out
    while queue:
        m = queue.popleft()
        for nxt in neighborhood_multicut(inst, m):
            out = inst.lift(nxt)
            key = canonical_key(out)
            if key in seen:
                continue
            seen.add(key)
            queue.append(nxt)
            yield out


def enumerate_minimal_edge_multicuts(g: Graph, pairs: Iterable[Sequence[int]]) -> Iterator[frozenset[Edge]]:
    """Minimal edge multicuts via node multicuts of the expanded line graph."""
    g2, pairs2, edge_vertex, _ = line_graph_expand(g, pairs)
    vertex_edge = {i: e for e, i in edge_vertex.items()}
    for m in enumerate_minimal_node_multicuts(g2, pairs2):
        yield frozenset(vertex_edge[x] for x in m)
