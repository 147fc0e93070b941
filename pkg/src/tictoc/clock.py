"""Monotonic nanosecond time sources.

Time points are plain ``int`` nanoseconds from an arbitrary per-process
epoch. Only differences are meaningful.
"""

from __future__ import annotations

import time

#: Largest representable time point (unsigned 64-bit range). A matched
#: tic entry is overwritten with this value, so a second toc on the same
#: key yields a negative duration.
SENTINEL = 2**64 - 1


class RealClock:
    """Monotonic clock backed by :func:`time.perf_counter_ns`."""

    kind = "real"

    def now(self) -> int:
        return time.perf_counter_ns()

    def __repr__(self) -> str:
        return "RealClock()"


class MockClock:
    """Deterministic clock for tests.

    Returns exactly ``now_ns`` until moved with :meth:`advance` or
    :meth:`set`. Reads are safe from any thread; moving the clock must not
    race with reads.

    >>> clock = MockClock(100)
    >>> clock.advance(250)
    >>> clock.now()
    350
    """

    kind = "mock"

    def __init__(self, now_ns: int = 0) -> None:
        self._check(now_ns)
        self.now_ns = now_ns

    @staticmethod
    def _check(value: int) -> None:
        if value < 0:
            raise ValueError(f"time point must be non-negative, got {value}")
        if value >= SENTINEL:
            raise OverflowError("time point would reach the sentinel value")

    def now(self) -> int:
        return self.now_ns

    def advance(self, delta_ns: int) -> None:
        if delta_ns < 0:
            raise ValueError(f"cannot move a monotonic clock backwards ({delta_ns} ns)")
        self._check(self.now_ns + delta_ns)
        self.now_ns += delta_ns

    def set(self, now_ns: int) -> None:
        if now_ns < self.now_ns:
            raise ValueError("cannot move a monotonic clock backwards")
        self._check(now_ns)
        self.now_ns = now_ns

    def __repr__(self) -> str:
        return f"MockClock(now_ns={self.now_ns})"


def now(source: RealClock | MockClock) -> int:
    """Read ``source``."""
    return source.now()
