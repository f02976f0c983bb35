"""Terminal specifications, minimality characterizations, minimalization and
the progress measures used to certify the solution graphs.

Blocks of an ordered partition and terminal indices are 0-based throughout.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Edge, Graph, components_minus_edges, components_minus_vertices, norm_edge
from .instrument import tick


class TerminalError(ValueError):
    """A cut was asked to contain a terminal, or a terminal spec is malformed."""


class NotACutError(ValueError):
    """An operation that requires a cut received a non-cut."""


@dataclass(frozen=True)
class TerminalPairs:
    """A set ``B`` of unordered terminal pairs."""

    pairs: tuple[Edge, ...]
    terminals: frozenset[int] = field(init=False)
    partners: dict[int, frozenset[int]] = field(init=False, compare=False, hash=False, repr=False)

    def __init__(self, pairs: Iterable[Sequence[int]]):
        norm = set()
        for p in pairs:
            s, t = int(p[0]), int(p[1])
            if s == t:
                raise TerminalError(f"terminal pair ({s}, {t}) has equal endpoints")
            norm.add(norm_edge(s, t))
        partners: dict[int, set[int]] = {}
        for s, t in norm:
            partners.setdefault(s, set()).add(t)
            partners.setdefault(t, set()).add(s)
        object.__setattr__(self, "pairs", tuple(sorted(norm)))
        object.__setattr__(self, "terminals", frozenset(partners))
        object.__setattr__(self, "partners", {t: frozenset(p) for t, p in partners.items()})

    def has_pair_within(self, vertices: frozenset[int] | set[int]) -> bool:
        for t in self.terminals.intersection(vertices):
            if not self.partners[t].isdisjoint(vertices):
                return True
        return False

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class OrderedTerminals:
    """An ordered terminal list ``(t_1, ..., t_k)``; order fixes the root."""

    terminals: tuple[int, ...]

    def __init__(self, terminals: Iterable[int]):
        ts = tuple(int(t) for t in terminals)
        if len(set(ts)) != len(ts):
            raise TerminalError(f"duplicate terminals in {ts}")
        object.__setattr__(self, "terminals", ts)

    @property
    def k(self) -> int:
        return len(self.terminals)

    @property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.terminals)

    def __iter__(self):
        return iter(self.terminals)

    def __len__(self) -> int:
        return len(self.terminals)


def _as_pairs(spec) -> TerminalPairs:
    return spec if isinstance(spec, TerminalPairs) else TerminalPairs(spec)


def _as_ordered(spec) -> OrderedTerminals:
    return spec if isinstance(spec, OrderedTerminals) else OrderedTerminals(spec)


@dataclass(frozen=True)
class OrderedPartition:
    """Partition of ``V`` into ``k`` blocks, block ``i`` holding terminal ``i``."""

    blocks: tuple[frozenset[int], ...]
    position: tuple[int, ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "OrderedPartition":
        bs = tuple(frozenset(b) for b in blocks)
        size = sum(len(b) for b in bs) if n is None else n
        pos = [-1] * size
        for i, b in enumerate(bs):
            for v in b:
                if pos[v] != -1:
                    raise ValueError(f"vertex {v} lies in two blocks")
                pos[v] = i
        if -1 in pos:
            raise ValueError("blocks do not cover every vertex")
        return cls(bs, tuple(pos))

    @property
    def k(self) -> int:
        return len(self.blocks)

    def cut_edges(self, g: Graph) -> frozenset[Edge]:
        return frozenset(e for e in g.edges if self.position[e[0]] != self.position[e[1]])

    def replace(self, changes: dict[int, frozenset[int]]) -> "OrderedPartition":
        blocks = list(self.blocks)
        pos = list(self.position)
        for i, b in changes.items():
            blocks[i] = b
            for v in b:
                pos[v] = i
        return OrderedPartition(tuple(blocks), tuple(pos))


# ---------------------------------------------------------------- multicuts


def _check_no_terminals(m: frozenset[int], terminals: frozenset[int]) -> None:
    bad = m & terminals
    if bad:
        raise TerminalError(f"cut contains terminals {sorted(bad)}")


def is_node_multicut(g: Graph, spec, m: Iterable[int]) -> bool:
    """True iff every pair of ``spec`` is disconnected in ``G - m``."""
    b = _as_pairs(spec)
    ms = frozenset(m)
    _check_no_terminals(ms, b.terminals)
    return not any(b.has_pair_within(c) for c in components_minus_vertices(g, ms) if c & b.terminals)


def component_family(g: Graph, spec, m: Iterable[int]) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Terminal-bearing components of ``G - m`` with the terminals inside each."""
    b = _as_pairs(spec)
    ms = frozenset(m)
    _check_no_terminals(ms, b.terminals)
    fam = []
    for c in components_minus_vertices(g, ms):
        inside = c & b.terminals
        if not inside:
            continue
        if b.has_pair_within(inside):
            raise NotACutError("a component of G - m contains a terminal pair")
        fam.append((c, inside))
    return fam


def check_minimal_node_multicut(g: Graph, spec, m: Iterable[int]) -> bool:
    """Every cut vertex sees both sides of some pair (returns False for non-cuts)."""
    b = _as_pairs(spec)
    ms = frozenset(m)
    try:
        fam = component_family(g, b, ms)
    except NotACutError:
        return False
    where = {}
    for idx, (c, inside) in enumerate(fam):
        for t in inside:
            where[t] = idx
    for v in ms:
        touched = {where_c for where_c, (c, _) in enumerate(fam) if g.neighbors(v) & c}
        tick(len(g.adj[v]))
        if not any(where[s] in touched and where[t] in touched for s, t in b.pairs):
            return False
    return True


class _DSU:
    """Union-find over vertices; roots carry the terminals they contain."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x


def comp_minimalize_multicut(g: Graph, spec, m: Iterable[int]) -> frozenset[int]:
    """Shrink a node multicut to a minimal one by an ascending removal scan."""
    b = _as_pairs(spec)
    ms = frozenset(m)
    _check_no_terminals(ms, b.terminals)
    dsu = _DSU(g.n)
    terms: dict[int, set[int]] = {}
    for c in components_minus_vertices(g, ms):
        r = min(c)
        for v in c:
            dsu.parent[v] = r
        terms[r] = set(c & b.terminals)
        if b.has_pair_within(terms[r]):
            raise NotACutError("input is not a node multicut")
    kept = set(ms)
    for v in sorted(ms):
        roots = {dsu.find(w) for w in g.adj[v] if w not in kept}
        tick(len(g.adj[v]))
        merged: set[int] = set()
        for r in roots:
            merged |= terms[r]
        if any(b.partners[t] & merged for t in merged):
            continue
        kept.discard(v)
        terms[v] = merged
        for r in roots:
            dsu.parent[r] = v
            del terms[r]
    return frozenset(kept)


def _mcc(target: frozenset[int], comps: list[frozenset[int]]) -> frozenset[int]:
    # comps is ordered by smallest vertex, so the first minimum wins ties
    best = None
    best_loss = None
    for c in comps:
        loss = len(target - c)
        if best_loss is None or loss < best_loss:
            best, best_loss = c, loss
    return best if best is not None else frozenset()


def dist_multicut(g: Graph, spec, m: Iterable[int], m_target: Iterable[int]) -> int:
    """Sum over target components ``C'`` of ``|C' - mcc(C', m)|``."""
    b = _as_pairs(spec)
    comps = components_minus_vertices(g, frozenset(m))
    total = 0
    for c_target, _ in component_family(g, b, m_target):
        total += len(c_target - _mcc(c_target, comps))
    return total


# ------------------------------------------------------------- multiway cuts


def multiway_components(g: Graph, spec, m: Iterable[int]) -> tuple[frozenset[int], ...] | None:
    """Components ``(C_1..C_k)`` of ``G - m`` holding each terminal, or None if
    two terminals share a component."""
    t = _as_ordered(spec)
    ms = frozenset(m)
    _check_no_terminals(ms, t.as_set)
    comp_of = {}
    for c in components_minus_vertices(g, ms):
        for v in c & t.as_set:
            comp_of[v] = c
    fam = tuple(comp_of[x] for x in t.terminals)
    if len(set(fam)) != len(fam):
        return None
    return fam


def is_node_multiway_cut(g: Graph, spec, m: Iterable[int]) -> bool:
    return multiway_components(g, spec, m) is not None


def check_minimal_node_multiway(g: Graph, spec, m: Iterable[int]) -> bool:
    """Every cut vertex has neighbors in at least two terminal components."""
    ms = frozenset(m)
    fam = multiway_components(g, spec, ms)
    if fam is None:
        return False
    for v in ms:
        nb = g.neighbors(v)
        tick(len(nb))
        if sum(1 for c in fam if nb & c) < 2:
            return False
    return True


def comp_minimalize_multiway(g: Graph, spec, m: Iterable[int]) -> frozenset[int]:
    """Minimal node multiway cut inside ``m`` in one ascending pass.

    Each vertex carries the index of the terminal component it lies in (or
    -1); dropping a cut vertex merges its neighboring components, which is
    allowed only if at most one terminal index is involved.
    """
    t = _as_ordered(spec)
    ms = frozenset(m)
    _check_no_terminals(ms, t.as_set)
    dsu = _DSU(g.n)
    index: dict[int, int] = {}
    for c in components_minus_vertices(g, ms):
        r = min(c)
        for v in c:
            dsu.parent[v] = r
        idx = [i for i, x in enumerate(t.terminals) if x in c]
        if len(idx) > 1:
            raise NotACutError("input is not a node multiway cut")
        index[r] = idx[0] if idx else -1
    kept = set(ms)
    for v in sorted(ms):
        roots = {dsu.find(w) for w in g.adj[v] if w not in kept}
        tick(len(g.adj[v]))
        labels = {index[r] for r in roots} - {-1}
        if len(labels) > 1:
            continue
        kept.discard(v)
        index[v] = labels.pop() if labels else -1
        for r in roots:
            dsu.parent[r] = v
    return frozenset(kept)


def dist_multiway(family: Sequence[frozenset[int]], target: Sequence[frozenset[int]]) -> int:
    """``sum_i |target_i - family_i|`` over terminal-indexed families."""
    if len(family) != len(target):
        raise ValueError(f"families have different sizes {len(family)} and {len(target)}")
    return sum(len(ct - c) for c, ct in zip(family, target))


def is_edge_multiway_cut(g: Graph, spec, f: Iterable[Sequence[int]]) -> bool:
    t = _as_ordered(spec)
    comps = components_minus_edges(g, f)
    owner = {}
    for idx, c in enumerate(comps):
        for v in c & t.as_set:
            owner[v] = idx
    return len(set(owner.values())) == t.k


def check_minimal_edge_multiway(g: Graph, spec, f: Iterable[Sequence[int]]) -> bool:
    """``G - f`` has exactly ``k`` components, each with one terminal."""
    t = _as_ordered(spec)
    fs = {norm_edge(e[0], e[1]) for e in f}
    if not fs <= set(g.edges):
        return False
    comps = components_minus_edges(g, fs)
    if len(comps) != t.k:
        return False
    if not all(len(c & t.as_set) == 1 for c in comps):
        return False
    # an edge inside a component could be restored without merging anything
    label = {v: i for i, c in enumerate(comps) for v in c}
    return all(label[u] != label[v] for u, v in fs)


def partition_of_edge_cut(g: Graph, spec, f: Iterable[Sequence[int]]) -> OrderedPartition:
    """Ordered partition of a minimal edge multiway cut."""
    t = _as_ordered(spec)
    comps = components_minus_edges(g, f)
    block = {}
    for c in comps:
        for i, x in enumerate(t.terminals):
            if x in c:
                block[i] = c
    if len(block) != t.k or len(comps) != t.k:
        raise NotACutError("edge set is not a minimal edge multiway cut")
    return OrderedPartition.from_blocks([block[i] for i in range(t.k)], g.n)


# ------------------------------------------------------------ canonical keys


def canonical_key(solution: Iterable) -> bytes:
    """Big-endian length-prefixed encoding of a sorted vertex or edge set."""
    items = sorted(solution)
    tick(len(items))
    flat: list[int] = []
    for x in items:
        if isinstance(x, tuple):
            flat.extend(sorted(x))
        else:
            flat.append(x)
    return struct.pack(f">I{len(flat)}I", len(items), *flat)
