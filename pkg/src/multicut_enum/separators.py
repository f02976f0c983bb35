"""Lazy enumeration of minimal a-b vertex separators.

A separator ``S`` is represented by its a-side full component ``A``.  For a
connected set ``X`` containing ``a`` with ``b`` outside ``N[X]``, the separator
closest to ``X`` is ``N(D)`` where ``D`` is the component of ``b`` in
``G - N(X)``; its a-side is the smallest full a-component containing ``X``.
Starting from ``X = {a}`` and repeatedly absorbing one separator vertex into
the a-side reaches every minimal a-b separator, so a breadth-first traversal
with a visited set enumerates them with polynomial delay.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph, component_of, neighbors_of_set
from .solutions import canonical_key


class NoSeparatorError(ValueError):
    """Raised when ``a`` and ``b`` are adjacent, so no separator exists."""


@dataclass(frozen=True)
class SeparatorInstance:
    graph: Graph
    a: int
    b: int

    def __post_init__(self) -> None:
        n = self.graph.n
        if not (0 <= self.a < n and 0 <= self.b < n):
            raise ValueError("separator endpoints out of range")
        if self.a == self.b:
            raise ValueError("separator endpoints must differ")


def is_minimal_ab_separator(inst: SeparatorInstance, s: Iterable[int]) -> bool:
    g, a, b = inst.graph, inst.a, inst.b
    ss = frozenset(s)
    if a in ss or b in ss:
        return False
    side_a = component_of(g, a, ss)
    if b in side_a:
        return False
    side_b = component_of(g, b, ss)
    return neighbors_of_set(g, side_a) == ss and neighbors_of_set(g, side_b) == ss


def _closest(g: Graph, b: int, x: frozenset[int]) -> frozenset[int]:
    border = neighbors_of_set(g, x)
    side_b = component_of(g, b, border | x)
    return neighbors_of_set(g, side_b)


def enumerate_minimal_ab_separators(inst: SeparatorInstance) -> Iterator[frozenset[int]]:
    """Yield every minimal a-b separator once, lazily, in BFS order.

    Each separator is emitted when it is dequeued, before its successors are
    generated, so the work between two outputs is one successor expansion.
    """
    g, a, b = inst.graph, inst.a, inst.b
    if g.has_edge(a, b):
        raise NoSeparatorError(f"vertices {a} and {b} are adjacent; no separator exists")
    return _traverse(g, a, b)


def _traverse(g: Graph, a: int, b: int) -> Iterator[frozenset[int]]:
    start = _closest(g, b, frozenset([a]))
    seen = {canonical_key(start)}
    queue = deque([start])
    while queue:
        sep = queue.popleft()
        yield sep
        side_a = component_of(g, a, sep)
        found = []
        for x in sorted(sep):
            if g.has_edge(x, b):
                continue
            nxt = _closest(g, b, side_a | {x})
            key = canonical_key(nxt)
            if key not in seen:
                seen.add(key)
                found.append((key, nxt))
        found.sort(key=lambda kv: kv[0])
        queue.extend(s for _, s in found)
