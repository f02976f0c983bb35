"""Immutable simple undirected graphs and the structural primitives shared by
every enumerator.

Vertices are the dense integers ``0..n-1`` and edges are stored as ``(u, v)``
with ``u < v``.  Vertex and edge sets are passed around as frozensets; the
functions here never mutate their inputs.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping, Sequence

from .instrument import tick

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised when a graph file or edge list is malformed."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj", "_adjsets", "connected")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphFormatError("vertex count must be nonnegative")
        es = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            ed = norm_edge(u, v)
            if ed in es:
                raise GraphFormatError(f"parallel edge {ed}")
            es.add(ed)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in es:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(es))
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in nbrs)
        self._adjsets = tuple(frozenset(a) for a in self.adj)
        self.connected = n == 0 or len(components_minus_vertices(self, frozenset())) == 1

    @classmethod
    def from_adjacency(cls, n: int, adjacency: Mapping[int, Iterable[int]]) -> "Graph":
        return cls(n, {norm_edge(u, v) for u, vs in adjacency.items() for v in vs})

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjsets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def parse_graph(text: str, require_connected: bool = True) -> Graph:
    """Parse the ``n m`` header plus ``m`` lines of ``u v`` edge format."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphFormatError("empty graph file")
    try:
        header = [int(x) for x in rows[0]]
        body = [[int(x) for x in r] for r in rows[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"non-integer token: {exc}") from None
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'")
    n, m = header
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}")
    for r in body:
        if len(r) != 2:
            raise GraphFormatError(f"edge line must have two ids, got {r}")
    g = Graph(n, body)
    if require_connected and not g.connected:
        raise GraphFormatError("graph is disconnected; split it into components first")
    return g


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def _bfs(g: Graph, start: int, blocked: frozenset[int] | set[int], seen: set[int]) -> list[int]:
    comp = [start]
    seen.add(start)
    queue = deque([start])
    while queue:
        x = queue.popleft()
        nb = g.adj[x]
        tick(len(nb))
        for y in nb:
            if y not in seen and y not in blocked:
                seen.add(y)
                comp.append(y)
                queue.append(y)
    return comp


def component_of(g: Graph, start: int, blocked: Iterable[int] = frozenset()) -> frozenset[int]:
    """Vertices reachable from ``start`` in ``G - blocked``."""
    blocked = blocked if isinstance(blocked, (set, frozenset)) else frozenset(blocked)
    return frozenset(_bfs(g, start, blocked, set()))


def components_minus_vertices(g: Graph, removed: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of ``G - removed``, ordered by smallest vertex."""
    removed = removed if isinstance(removed, (set, frozenset)) else frozenset(removed)
    seen: set[int] = set()
    out = []
    for v in range(g.n):
        if v in seen or v in removed:
            continue
        out.append(frozenset(_bfs(g, v, removed, seen)))
    return out


def components_within(g: Graph, within: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the induced subgraph ``G[within]``."""
    within = frozenset(within)
    seen: set[int] = set()
    out = []
    for v in sorted(within):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        queue = deque([v])
        while queue:
            x = queue.popleft()
            nb = g.adj[x]
            tick(len(nb))
            for y in nb:
                if y in within and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        out.append(frozenset(comp))
    return out


def components_minus_edges(g: Graph, removed: Iterable[Sequence[int]]) -> list[frozenset[int]]:
    """Connected components of ``(V, E - removed)``, ordered by smallest vertex."""
    cut = {norm_edge(e[0], e[1]) for e in removed}
    seen: set[int] = set()
    out = []
    for v in range(g.n):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        queue = deque([v])
        while queue:
            x = queue.popleft()
            nb = g.adj[x]
            tick(len(nb))
            for y in nb:
                if y not in seen and norm_edge(x, y) not in cut:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        out.append(frozenset(comp))
    return out


def neighbors_of_set(g: Graph, x: Iterable[int]) -> frozenset[int]:
    """Open neighborhood ``N(X)``: vertices outside ``X`` adjacent to ``X``."""
    xs = frozenset(x)
    out: set[int] = set()
    for v in xs:
        nb = g.adj[v]
        tick(len(nb))
        out.update(nb)
    return frozenset(out - xs)


def articulation_points(g: Graph, within: Iterable[int] | None = None) -> frozenset[int]:
    """Cut vertices of ``G[within]`` (the whole graph when ``within`` is None).

    Raises ValueError if the induced subgraph is disconnected.
    """
    ws = frozenset(range(g.n)) if within is None else frozenset(within)
    if not ws:
        return frozenset()
    root = min(ws)
    disc: dict[int, int] = {root: 0}
    low: dict[int, int] = {root: 0}
    cuts: set[int] = set()
    root_children = 0
    # iterative Tarjan: frames of (vertex, parent, neighbor iterator)
    stack = [(root, -1, iter(g.adj[root]))]
    tick(len(g.adj[root]))
    counter = 1
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w not in ws:
                continue
            if w not in disc:
                disc[w] = low[w] = counter
                counter += 1
                tick(len(g.adj[w]))
                stack.append((w, v, iter(g.adj[w])))
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if parent == root:
                root_children += 1
            elif low[v] >= disc[parent]:
                cuts.add(parent)
    if len(disc) != len(ws):
        raise ValueError("induced subgraph is disconnected")
    if root_children > 1:
        cuts.add(root)
    return frozenset(cuts)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """``G[vertices]`` relabelled densely; returns the graph and new→old ids."""
    old = sorted(set(vertices))
    index = {v: i for i, v in enumerate(old)}
    edges = []
    for v in old:
        tick(len(g.adj[v]))
        for w in g.adj[v]:
            if v < w and w in index:
                edges.append((index[v], index[w]))
    return Graph(len(old), edges), old


def contract_set(g: Graph, x: Iterable[int]) -> tuple[Graph, list[int]]:
    """Identify all of ``x`` into one vertex.

    The merged vertex takes the position of ``min(x)``; every other vertex
    keeps its relative order.  Loops and parallel edges created by the
    identification are dropped.  Returns the new graph and the total mapping
    old vertex → new vertex as a list.
    """
    xs = frozenset(x)
    if not xs:
        raise ValueError("cannot contract an empty set")
    rep = min(xs)
    mapping = [0] * g.n
    nxt = 0
    for v in range(g.n):
        if v in xs and v != rep:
            continue
        mapping[v] = nxt
        nxt += 1
    for v in xs:
        mapping[v] = mapping[rep]
    edges = set()
    for u, v in g.edges:
        a, b = mapping[u], mapping[v]
        if a != b:
            edges.add(norm_edge(a, b))
    tick(g.m)
    return Graph(nxt, edges), mapping


def line_graph_expand(
    g: Graph, pairs: Iterable[Sequence[int]]
) -> tuple[Graph, list[tuple[int, int]], dict[Edge, int], dict[int, int]]:
    """Line graph of ``g`` with one extra terminal per terminal of ``pairs``.

    Edge-vertices come first, numbered in sorted edge order; terminal copies
    follow in increasing order of the original terminal.  Returns
    ``(g', pairs', edge → vertex map, terminal → terminal-copy map)``.
    """
    pair_list = [norm_edge(int(p[0]), int(p[1])) for p in pairs]
    terms = sorted({t for p in pair_list for t in p})
    edge_vertex = {e: i for i, e in enumerate(g.edges)}
    term_vertex = {t: g.m + i for i, t in enumerate(terms)}
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for e, i in edge_vertex.items():
        incident[e[0]].append(i)
        incident[e[1]].append(i)
    edges = set()
    for inc in incident:
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                edges.add(norm_edge(inc[a], inc[b]))
    for t, tv in term_vertex.items():
        for i in incident[t]:
            edges.add(norm_edge(tv, i))
    g2 = Graph(g.m + len(terms), edges)
    pairs2 = sorted({norm_edge(term_vertex[s], term_vertex[t]) for s, t in pair_list})
    return g2, pairs2, edge_vertex, term_vertex
