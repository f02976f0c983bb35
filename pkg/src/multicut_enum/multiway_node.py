"""Polynomial-delay enumeration of minimal node multiway cuts.

Each solution's neighborhood is obtained by moving one cut vertex ``v`` into
a terminal component ``C_i`` (cutting ``v``'s neighbors in the other
components instead) and minimalizing.  The neighborhood has at most ``k*n``
members; a visited set over all emitted solutions prevents duplicates, so
space is exponential in the worst case.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph
from .instrument import tick
from .solutions import (
    OrderedTerminals,
    canonical_key,
    comp_minimalize_multiway,
    multiway_components,
)


@dataclass(frozen=True)
class MultiwaySolution:
    cut: frozenset[int]
    family: tuple[frozenset[int], ...]


def make_solution(g: Graph, spec, cut) -> MultiwaySolution:
    fam = multiway_components(g, spec, cut)
    if fam is None:
        raise ValueError("not a node multiway cut")
    return MultiwaySolution(frozenset(cut), fam)


def terminals_adjacent(g: Graph, spec) -> bool:
    ts = frozenset(spec)
    return any(not g.neighbors(t).isdisjoint(ts) for t in ts)


def shift_candidate(g: Graph, spec, sol: MultiwaySolution, i: int, v: int) -> frozenset[int] | None:
    """Cut obtained by moving ``v`` into component ``i``.

    Returns None when ``v`` is adjacent to a terminal other than ``t_i``.
    """
    t = spec if isinstance(spec, OrderedTerminals) else OrderedTerminals(spec)
    nb = g.neighbors(v)
    tick(len(nb))
    for j, x in enumerate(t.terminals):
        if j != i and x in nb:
            return None
    out = set(sol.cut)
    out.discard(v)
    for j, c in enumerate(sol.family):
        if j != i:
            out.update(nb & c)
    return frozenset(out)


def neighborhood_multiway_node(g: Graph, spec, sol: MultiwaySolution) -> list[MultiwaySolution]:
    t = spec if isinstance(spec, OrderedTerminals) else OrderedTerminals(spec)
    out: list[MultiwaySolution] = []
    seen = set()
    for v in sorted(sol.cut):
        for i in range(t.k):
            cand = shift_candidate(g, t, sol, i, v)
            if cand is None:
                continue
            cut = comp_minimalize_multiway(g, t, cand)
            if cut in seen:
                continue
            seen.add(cut)
            out.append(make_solution(g, t, cut))
    return out


def enumerate_minimal_node_multiway(g: Graph, spec) -> Iterator[frozenset[int]]:
    """Yield every minimal node multiway cut once, each on dequeue.

    Yields nothing if two terminals are adjacent (no cut exists).
    """
    t = spec if isinstance(spec, OrderedTerminals) else OrderedTerminals(spec)
    if terminals_adjacent(g, t):
        return
    start = comp_minimalize_multiway(g, t, frozenset(range(g.n)) - t.as_set)
    seen = {canonical_key(start)}
    queue = deque([make_solution(g, t, start)])
    while queue:
        sol = queue.popleft()
        yield sol.cut
        for nxt in neighborhood_multiway_node(g, t, sol):
            key = canonical_key(nxt.cut)
            if key not in seen:
                seen.add(key)
                queue.append(nxt)
