"""Polynomial-delay, polynomial-space enumeration of minimal edge multiway
cuts by reverse search.

A minimal edge multiway cut is identified with an ordered partition of ``V``
into ``k`` connected blocks, block ``i`` containing terminal ``t_i``.  The
root is the partition obtained by growing each block greedily in terminal
order.  Every other partition has a unique parent obtained by shifting its
pivot vertex into an earlier block, which strictly decreases the depth
``sum_v (pos(v) - root_pos(v))``.  The tree is walked depth first without a
visited set; solutions are emitted before the children at even depth and
after them at odd depth so that consecutive outputs are never more than
three tree events apart.

Block and terminal indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .graph import Edge, Graph, articulation_points, component_of
from .instrument import counter, tick
from .solutions import OrderedPartition, OrderedTerminals


def _ordered(spec) -> OrderedTerminals:
    return spec if isinstance(spec, OrderedTerminals) else OrderedTerminals(spec)


def _component_within(g: Graph, start: int, within: frozenset[int]) -> frozenset[int]:
    return component_of(g, start, frozenset(range(g.n)) - within)


def compute_root(g: Graph, spec) -> OrderedPartition:
    """Block ``i`` is the component of ``t_i`` in ``G`` minus the earlier
    blocks and the later terminals."""
    t = _ordered(spec)
    if not g.connected:
        raise ValueError("edge multiway enumeration needs a connected graph")
    taken: set[int] = set()
    blocks = []
    for i, x in enumerate(t.terminals):
        blocked = taken | set(t.terminals[i + 1 :])
        c = component_of(g, x, blocked)
        blocks.append(c)
        taken |= c
    return OrderedPartition.from_blocks(blocks, g.n)


def depth(p: OrderedPartition, root: OrderedPartition) -> int:
    return sum(a - b for a, b in zip(p.position, root.position))


def shiftable_vertices(g: Graph, spec, p: OrderedPartition) -> list[tuple[int, int]]:
    """Pairs ``(v, i)``: non-terminal ``v`` in a later block, adjacent to block ``i``."""
    ts = _ordered(spec).as_set
    out = []
    for v in range(g.n):
        if v in ts:
            continue
        nb = g.adj[v]
        tick(len(nb))
        pv = p.position[v]
        for i in sorted({p.position[w] for w in nb if p.position[w] < pv}):
            out.append((v, i))
    return out


class RootPartitionError(ValueError):
    """Pivot and parent are undefined at the root."""


def select_pivot(g: Graph, spec, p: OrderedPartition) -> tuple[int, int, int]:
    """Return ``(pivot, li, s)``: the pivot, the largest block receiving a
    shiftable vertex, and the block the pivot currently sits in."""
    t = _ordered(spec)
    shift = shiftable_vertices(g, t, p)
    if not shift:
        raise RootPartitionError("partition has no shiftable vertex (it is the root)")
    li = max(i for _, i in shift)
    q = {v for v, i in shift if i == li}
    s = max(p.position[v] for v in q)
    q = {v for v in q if p.position[v] == s}
    if len(q) > 1:
        block = p.blocks[s]
        cuts = articulation_points(g, block)
        if q - cuts:
            q -= cuts
        else:
            # drop v when some other candidate is cut off from t_s by v
            ts = t.terminals[s]
            reach = {v: _component_within(g, ts, block - {v}) for v in q}
            q = {v for v in q if all(w in reach[v] for w in q if w != v)}
    return min(q), li, s


def parent(g: Graph, spec, p: OrderedPartition) -> OrderedPartition:
    t = _ordered(spec)
    pivot, li, s = select_pivot(g, t, p)
    block = p.blocks[s]
    stay = _component_within(g, t.terminals[s], block - {pivot})
    return p.replace({li: p.blocks[li] | (block - stay), s: stay})


def boundary(g: Graph, block: frozenset[int]) -> list[int]:
    out = []
    for v in sorted(block):
        tick(len(g.adj[v]))
        if any(w not in block for w in g.adj[v]):
            out.append(v)
    return out


def children_stream(g: Graph, spec, p: OrderedPartition) -> Iterator[OrderedPartition]:
    """Yield the children of ``p`` in the reverse-search tree."""
    t = _ordered(spec)
    for i, block in enumerate(p.blocks):
        ti = t.terminals[i]
        for v in boundary(g, block):
            if v == ti:
                continue
            rest = _component_within(g, ti, block - {v})
            moved = block - rest
            targets = sorted({p.position[w] for w in g.adj[v] if p.position[w] > i})
            for j in targets:
                cand = p.replace({i: rest, j: p.blocks[j] | moved})
                if parent(g, t, cand) == p:
                    yield cand


@dataclass
class Event:
    """One visit of a tree node during the depth-first walk."""

    node: int
    depth: int
    emitted: bool


@dataclass
class _Frame:
    node: int
    partition: OrderedPartition
    depth: int
    children: Iterator[OrderedPartition]
    size: int = field(default=0)


def enumerate_minimal_edge_multiway(g: Graph, spec, events: list[Event] | None = None) -> Iterator[frozenset[Edge]]:
    """Yield every minimal edge multiway cut once as its set of inter-block edges.

    If ``events`` is given, one :class:`Event` is appended per tree event
    (first entry to a node and each return to it from a child).
    """
    for part in enumerate_partitions(g, spec, events):
        yield part.cut_edges(g)


def enumerate_partitions(g: Graph, spec, events: list[Event] | None = None) -> Iterator[OrderedPartition]:
    t = _ordered(spec)
    root = compute_root(g, t)
    serial = 0
    # retained state per frame: the partition plus the child generator's
    # loop state, both O(n)
    size = 2 * g.n + t.k
    stack = [_Frame(serial, root, 0, children_stream(g, t, root), size)]
    counter.hold(size)
    if events is not None:
        events.append(Event(serial, 0, True))
    yield root
    while stack:
        top = stack[-1]
        child = next(top.children, None)
        if child is not None:
            serial += 1
            d = top.depth + 1
            stack.append(_Frame(serial, child, d, children_stream(g, t, child), size))
            counter.hold(size)
            if events is not None:
                events.append(Event(serial, d, d % 2 == 0))
            if d % 2 == 0:
                yield child
            continue
        stack.pop()
        counter.release(top.size)
        if top.depth % 2 == 1:
            if events is not None:
                # the node's most recent event is its last one
                assert events[-1].node == top.node
                events[-1].emitted = True
            yield top.partition
        if stack and events is not None:
            up = stack[-1]
            events.append(Event(up.node, up.depth, False))
