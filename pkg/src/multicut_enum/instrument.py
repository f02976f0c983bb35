"""Primitive-operation counters used by the delay and space checks.

Graph traversals call :func:`tick` once per adjacency entry they inspect, so
the counter approximates elementary work independently of wall-clock noise.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Iterator


class OpCounter:
    """Monotone work counter plus a retained-state gauge."""

    def __init__(self) -> None:
        self.ops = 0
        self.retained = 0
        self.peak_retained = 0

    def reset(self) -> None:
        self.ops = 0
        self.retained = 0
        self.peak_retained = 0

    def hold(self, amount: int) -> None:
        self.retained += amount
        if self.retained > self.peak_retained:
            self.peak_retained = self.retained

    def release(self, amount: int) -> None:
        self.retained -= amount


counter = OpCounter()


def tick(amount: int = 1) -> None:
    counter.ops += amount


@contextmanager
def counting() -> Iterator[OpCounter]:
    """Reset the shared counter for the duration of a block."""
    counter.reset()
    yield counter
