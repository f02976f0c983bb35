"""Command-line front end.

Exit statuses: 0 success, 2 infeasible instance, 3 parse/usage error,
4 oracle mismatch, 5 oracle guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import queue
import resource
import sys
import threading
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphFormatError, parse_graph
from .instrument import counter
from .multicut import Infeasible, enumerate_minimal_edge_multicuts, enumerate_minimal_node_multicuts, preprocess
from .multiway_edge import enumerate_minimal_edge_multiway
from .multiway_node import enumerate_minimal_node_multiway, terminals_adjacent
from .oracle import GUARD_BITS, OracleKind, brute_force_enumerate
from .solutions import OrderedTerminals, TerminalError, TerminalPairs
from .steiner import (
    HypergraphError,
    Hypergraph,
    cross_check_transversal_duality,
    minimal_transversals_brute,
    parse_hypergraph,
)

EXIT_OK = 0
EXIT_INFEASIBLE = 2
EXIT_PARSE = 3
EXIT_MISMATCH = 4
EXIT_GUARD = 5

MODES = ("node-multicut", "edge-multicut", "node-multiway", "edge-multiway", "steiner-check")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    mode: str
    graph: str | None
    terminals: str
    limit: int | None = None
    stats: bool = False
    oracle_check: bool = False
    format: str = "lines"


@dataclass
class DelayStats:
    deltas: list[float] = field(default_factory=list)
    op_deltas: list[int] = field(default_factory=list)
    outputs: int = 0
    peak_rss_kb: int = 0

    @property
    def max_delay(self) -> float:
        return max(self.deltas, default=0.0)

    @property
    def mean_delay(self) -> float:
        return sum(self.deltas) / len(self.deltas) if self.deltas else 0.0

    def as_dict(self) -> dict:
        return {
            "outputs": self.outputs,
            "max_delay_s": self.max_delay,
            "mean_delay_s": self.mean_delay,
            "deltas_s": self.deltas,
            "max_ops_delta": max(self.op_deltas, default=0),
            "op_deltas": self.op_deltas,
            "peak_rss_kb": self.peak_rss_kb,
        }


def parse_terminals(text: str, mode: str, n: int | None = None):
    """Parse a terminal file for ``mode``; ids are range-checked against ``n``."""
    if mode == "steiner-check":
        return parse_hypergraph(text)
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    try:
        nums = [[int(x) for x in r] for r in rows]
    except ValueError as exc:
        raise TerminalError(f"non-integer terminal id: {exc}") from None
    ids = [x for r in nums for x in r]
    if n is not None and any(not 0 <= x < n for x in ids):
        raise TerminalError(f"terminal id out of range 0..{n - 1}")
    if mode in ("node-multicut", "edge-multicut"):
        for r in nums:
            if len(r) != 2:
                raise TerminalError(f"pair line must hold two ids, got {r}")
        return TerminalPairs(nums)
    if len(nums) != 1:
        raise TerminalError("multiway terminal file must be a single line")
    return OrderedTerminals(nums[0])


def format_solution(sol: Iterable, fmt: str) -> str:
    items = sorted(sol)
    is_edges = bool(items) and isinstance(items[0], tuple)
    if fmt == "json":
        if is_edges:
            return json.dumps({"edges": [list(e) for e in items]})
        return json.dumps({"vertices": items})
    if is_edges:
        return " ".join(f"{u}-{v}" for u, v in items)
    return " ".join(str(v) for v in items)


class _Writer:
    """Drains a bounded channel on a separate thread so that timestamps taken
    by the producer reflect generation, not terminal I/O."""

    def __init__(self, out: TextIO, fmt: str, threaded: bool):
        self.out = out
        self.fmt = fmt
        self.first = True
        self.thread = None
        if threaded:
            self.channel: queue.Queue = queue.Queue(maxsize=64)
            self.thread = threading.Thread(target=self._drain, daemon=True)
            self.thread.start()

    def _write(self, sol) -> None:
        line = format_solution(sol, self.fmt)
        if self.fmt == "json":
            self.out.write(("[" if self.first else ",\n") + line)
        else:
            self.out.write(line + "\n")
        self.first = False

    def _drain(self) -> None:
        while True:
            sol = self.channel.get()
            if sol is None:
                return
            self._write(sol)

    def put(self, sol) -> None:
        if self.thread is None:
            self._write(sol)
        else:
            self.channel.put(sol)

    def close(self) -> None:
        if self.thread is not None:
            self.channel.put(None)
            self.thread.join()
        if self.fmt == "json":
            self.out.write("[]\n" if self.first else "]\n")
        self.out.flush()


def _solutions(mode: str, g: Graph, spec) -> Iterator:
    if mode == "node-multicut":
        return enumerate_minimal_node_multicuts(g, spec)
    if mode == "edge-multicut":
        return enumerate_minimal_edge_multicuts(g, spec)
    if mode == "node-multiway":
        return enumerate_minimal_node_multiway(g, spec)
    return enumerate_minimal_edge_multiway(g, spec)


def _infeasible(mode: str, g: Graph, spec) -> bool:
    if mode == "node-multicut":
        return isinstance(preprocess(g, spec), Infeasible)
    if mode == "node-multiway":
        return terminals_adjacent(g, spec)
    return False


def _universe_size(mode: str, g: Graph, spec) -> int:
    if mode in ("edge-multicut", "edge-multiway"):
        return g.m
    terms = spec.terminals if mode == "node-multicut" else spec.as_set
    return g.n - len(terms)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _run_steiner(config: RunConfig, h: Hypergraph, out: TextIO, err: TextIO) -> int:
    if h.universe > GUARD_BITS:
        print(f"error: universe of {h.universe} exceeds the oracle guard", file=err)
        return EXIT_GUARD
    writer = _Writer(out, config.format, threaded=False)
    trans = sorted(minimal_transversals_brute(h), key=lambda s: (len(s), sorted(s)))
    for i, s in enumerate(trans):
        if config.limit is not None and i >= config.limit:
            break
        writer.put(s)
    writer.close()
    ok = cross_check_transversal_duality(h)
    if config.stats:
        print(json.dumps({"transversals": len(trans), "cross_check": ok}), file=err)
    return EXIT_OK if ok else EXIT_MISMATCH


def run(config: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        if config.mode not in MODES:
            raise UsageError(f"unknown mode {config.mode!r}")
        if config.mode == "steiner-check":
            return _run_steiner(config, parse_terminals(_read(config.terminals), config.mode), out, err)
        if config.graph is None:
            raise UsageError("--graph is required for this mode")
        g = parse_graph(_read(config.graph))
        spec = parse_terminals(_read(config.terminals), config.mode, g.n)
    except (OSError, GraphFormatError, TerminalError, HypergraphError, UsageError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE

    if config.oracle_check and _universe_size(config.mode, g, spec) > GUARD_BITS:
        print("error: instance too large for --oracle-check", file=err)
        return EXIT_GUARD

    stats = DelayStats()
    writer = _Writer(out, config.format, threaded=config.stats)
    counter.reset()
    start = last = time.perf_counter()
    last_ops = 0
    infeasible = _infeasible(config.mode, g, spec)
    emitted: list = []
    seen = set()
    if not infeasible and config.limit != 0:
        for sol in _solutions(config.mode, g, spec):
            now = time.perf_counter()
            stats.deltas.append(now - last)
            stats.op_deltas.append(counter.ops - last_ops)
            last, last_ops = now, counter.ops
            if config.oracle_check:
                # retained only when checking; plain runs keep no per-output state
                if sol in seen:
                    print(f"duplicate solution {sorted(sol)}", file=err)
                    return EXIT_MISMATCH
                seen.add(sol)
                emitted.append(sol)
            writer.put(sol)
            stats.outputs += 1
            if config.limit is not None and stats.outputs >= config.limit:
                break
    now = time.perf_counter()
    stats.deltas.append(now - last)
    stats.op_deltas.append(counter.ops - last_ops)
    writer.close()
    stats.peak_rss_kb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    if config.stats:
        info = stats.as_dict()
        info["total_s"] = now - start
        info["infeasible"] = infeasible
        print(json.dumps(info), file=err)

    if config.oracle_check:
        expected = brute_force_enumerate(g, spec, OracleKind(config.mode))
        got = set(emitted)
        complete = config.limit is None or stats.outputs < config.limit
        if (complete and got != expected) or not got <= expected:
            print(f"oracle mismatch: {len(got)} emitted, {len(expected)} expected", file=err)
            return EXIT_MISMATCH
    return EXIT_INFEASIBLE if infeasible else EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="multicut-enum", description="Enumerate minimal multicuts and multiway cuts.")
    p.add_argument("--mode", required=True, choices=MODES)
    p.add_argument("--graph", help="graph file: 'n m' header then 'u v' lines ('-' for stdin)")
    p.add_argument("--terminals", required=True, help="pairs file, terminal list, or hypergraph file")
    p.add_argument("--limit", type=int, default=None, help="stop after this many solutions")
    p.add_argument("--stats", action="store_true", help="print delay statistics as JSON on stderr")
    p.add_argument("--oracle-check", action="store_true", help="compare with brute force (small inputs)")
    p.add_argument("--format", choices=("lines", "json"), default="lines")
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.limit is not None and args.limit < 0:
        print("error: --limit must be nonnegative", file=sys.stderr)
        return EXIT_PARSE
    config = RunConfig(
        mode=args.mode,
        graph=args.graph,
        terminals=args.terminals,
        limit=args.limit,
        stats=args.stats,
        oracle_check=args.oracle_check,
        format=args.format,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
