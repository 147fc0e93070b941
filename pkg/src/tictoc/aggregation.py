"""Online per-tag summary statistics.

Spans are folded into running statistics with Welford's update, so the
raw buffer can be cleared after every pass and later passes only touch
new spans.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, NamedTuple

from .clock import SENTINEL

if TYPE_CHECKING:
    from .timer import Timer

_FLOAT_MAX = sys.float_info.max


class StatEntry(NamedTuple):
    """Running statistics for one tag, all in nanoseconds."""

    mean: float
    sst: float
    min: float
    max: float
    count: int

    @property
    def variance(self) -> float:
        """Sample variance (Bessel-corrected; 0 for a single observation)."""
        return self.sst / max(self.count - 1, 1)


@dataclass
class DiagnosticsSet:
    missing_tics: set[str] = field(default_factory=set)
    needless_tocs: set[str] = field(default_factory=set)

    def clear(self) -> None:
        self.missing_tics.clear()
        self.needless_tocs.clear()

    def __bool__(self) -> bool:
        return bool(self.missing_tics or self.needless_tocs)


def welford_update(entry: StatEntry | None, duration: float) -> StatEntry:
    """Fold one non-negative duration into ``entry`` (``None`` = no data yet).

    >>> welford_update(StatEntry(10.0, 0.0, 10.0, 10.0, 1), 30)
    StatEntry(mean=20.0, sst=200.0, min=10.0, max=30.0, count=2)
    """
    if entry is None:
        mean, sst, lo, hi, count = 0.0, 0.0, _FLOAT_MAX, 0.0, 0
    else:
        mean, sst, lo, hi, count = entry
    duration = float(duration)
    count += 1
    delta = duration - mean
    mean += delta / count
    sst += delta * (duration - mean)
    return StatEntry(mean, sst, min(lo, duration), max(hi, duration), count)


def aggregate(timer: Timer) -> dict[str, StatEntry]:
    """Fold the timer's span buffer into its statistics and clear the buffer.

    Negative durations come from a toc on an already-closed timer. They are
    skipped and their tag is recorded in ``timer.diagnostics.needless_tocs``.
    Returns the full statistics map in lexicographic tag order.
    """
    stats = timer.stats
    needless = timer.diagnostics.needless_tocs
    tags, durations = timer._tags, timer._durations
    for tag, duration in zip(tags, durations):
        if duration < 0:
            needless.add(tag)
            continue
        stats[tag] = welford_update(stats.get(tag), duration)
    tags.clear()
    durations.clear()
    if list(stats) != sorted(stats):
        ordered = sorted(stats.items())
        stats.clear()
        stats.update(ordered)
    return dict(stats)


def unmatched_tics(timer: Timer) -> set[str]:
    """Tags with at least one tic (on any thread) never closed by a toc."""
    return {key.tag for key, point in timer._tics.items() if point != SENTINEL}
