"""The :class:`Timer` object: named tic/toc section timers.

Timers are keyed by ``(tag, thread ordinal)`` so concurrent threads never
match each other's tics. Completed measurements go into a shared span
buffer; statistics are computed later by :func:`tictoc.aggregation.aggregate`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import IO, TYPE_CHECKING, NamedTuple, Union

from .aggregation import DiagnosticsSet, StatEntry, aggregate, unmatched_tics
from .clock import SENTINEL, MockClock, RealClock

if TYPE_CHECKING:
    from .report import Report

DEFAULT_TAG = "tictoc"
SCOPED_TAG = "scoped"

Sink = Union[str, IO[str], None]


class TicKey(NamedTuple):
    tag: str
    thread: int


class SpanRecord(NamedTuple):
    tag: str
    duration: int


@dataclass
class TimerConfig:
    """Timer settings.

    ``sink`` receives the report when it is returned automatically: ``None``
    means standard output, a string is a file path (``.csv`` and ``.json``
    suffixes select those formats, anything else gets the text table), and
    anything with a ``write`` method is used as-is.
    """

    name: str = "times"
    verbose: bool = True
    autoreturn: bool = True
    sink: Sink = None

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("timer name must be non-empty")


class Timer:
    """Section timer with tic/toc semantics.

    ``tic``, ``toc`` and ``scoped`` may be called from any number of threads
    at once. Everything else (aggregation, finalizing, reset) expects the
    recording threads to be done.

    Used as a context manager, the timer finalizes itself on exit: the
    report goes to the configured sink (if ``autoreturn``) and warnings to
    stderr (if ``verbose``).

    >>> from tictoc.clock import MockClock
    >>> clock = MockClock(100)
    >>> timer = Timer(autoreturn=False, clock=clock)
    >>> timer.tic("a"); clock.advance(250); timer.toc("a")
    >>> timer.raw_spans()
    [SpanRecord(tag='a', duration=250)]
    """

    def __init__(
        self,
        name: str | bool = "times",
        verbose: bool = True,
        *,
        autoreturn: bool = True,
        sink: Sink = None,
        clock: RealClock | MockClock | None = None,
        config: TimerConfig | None = None,
    ) -> None:
        if isinstance(name, bool):
            # Timer(False) mirrors the verbose-only constructor.
            name, verbose = "times", name
        self.config = config or TimerConfig(name, verbose, autoreturn, sink)
        self.clock = clock if clock is not None else RealClock()
        self._tics: dict[TicKey, int] = {}
        self._tags: list[str] = []
        self._durations: list[int] = []
        self.stats: dict[str, StatEntry] = {}
        self.diagnostics = DiagnosticsSet()
        self._lock = threading.Lock()
        self._local = threading.local()
        self._n_threads = 0
        self._returned = False
        self._warned: set[tuple[str, str]] = set()

    @property
    def name(self) -> str:
        return self.config.name

    @property
    def verbose(self) -> bool:
        return self.config.verbose

    @verbose.setter
    def verbose(self, value: bool) -> None:
        self.config.verbose = value

    @property
    def autoreturn(self) -> bool:
        return self.config.autoreturn

    @autoreturn.setter
    def autoreturn(self, value: bool) -> None:
        self.config.autoreturn = value

    def _ordinal(self) -> int:
        try:
            return self._local.ordinal
        except AttributeError:
            with self._lock:
                ordinal = self._local.ordinal = self._n_threads
                self._n_threads += 1
            return ordinal

    def tic(self, tag: str = DEFAULT_TAG) -> None:
        key = TicKey(tag, self._ordinal())
        with self._lock:
            self._tics[key] = self.clock.now()

    def toc(self, tag: str = DEFAULT_TAG) -> None:
        end = self.clock.now()
        key = TicKey(tag, self._ordinal())
        with self._lock:
            start = self._tics.get(key)
            if start is None:
                self.diagnostics.missing_tics.add(tag)
                return
            # Negative when the key was already closed (start == SENTINEL).
            self._durations.append(end - start)
            self._tags.append(tag)
            self._tics[key] = SENTINEL

    def scoped(self, tag: str = SCOPED_TAG) -> ScopedTimer:
        """Start timing ``tag`` now; the returned guard stops it once."""
        return ScopedTimer(self, tag)

    def raw_spans(self) -> list[SpanRecord]:
        """Spans recorded since the last aggregation."""
        return [SpanRecord(t, d) for t, d in zip(self._tags, self._durations)]

    def aggregate(self) -> dict[str, StatEntry]:
        return aggregate(self)

    def unmatched_tics(self) -> set[str]:
        return unmatched_tics(self)

    def stop(self) -> Report:
        """Finalize into a :class:`~tictoc.report.Report` (may be called repeatedly)."""
        from .report import finalize

        return finalize(self)

    finalize = stop

    def reset(self) -> None:
        """Drop all tics, spans, statistics and diagnostics. Settings are kept."""
        with self._lock:
            self._tics.clear()
            self._tags.clear()
            self._durations.clear()
            self.stats.clear()
            self.diagnostics.clear()
            self._warned.clear()

    def close(self) -> None:
        """End of the timer's lifetime: finalize if results are still owed."""
        if self.config.autoreturn and not self._returned:
            self.stop()
        elif self.config.verbose:
            from .report import emit_warnings

            self.aggregate()
            emit_warnings(self)

    def __enter__(self) -> Timer:
        return self

    def __exit__(self, *exc_info: object) -> None:
        self.close()

    def __repr__(self) -> str:
        return (
            f"Timer(name={self.name!r}, spans={len(self._tags)}, "
            f"tags={len(self.stats)})"
        )


class ScopedTimer:
    """Guard that tics on construction and tocs exactly once on exit.

    Use it in a ``with`` block, which also stops the timer when the block
    raises. A guard that is simply dropped stops when it is garbage
    collected.
    """

    __slots__ = ("timer", "tag", "_open")

    def __init__(self, timer: Timer, tag: str = SCOPED_TAG) -> None:
        self.timer = timer
        self.tag = tag
        self._open = True
        timer.tic(tag)

    def stop(self) -> None:
        if self._open:
            self._open = False
            self.timer.toc(self.tag)

    def __enter__(self) -> ScopedTimer:
        return self

    def __exit__(self, *exc_info: object) -> None:
        self.stop()

    def __del__(self) -> None:
        if getattr(self, "_open", False):
            self.stop()
