"""Tic/toc section timers with thread-aware recording and online statistics."""

from .aggregation import DiagnosticsSet, StatEntry, aggregate, unmatched_tics, welford_update
from .clock import SENTINEL, MockClock, RealClock
from .report import (
    Report,
    ReportRow,
    TimerWarning,
    choose_unit,
    collect_warnings,
    finalize,
    parse_csv,
    parse_json,
    render,
)
from .timer import ScopedTimer, SpanRecord, TicKey, Timer, TimerConfig

__all__ = [
    "SENTINEL",
    "DiagnosticsSet",
    "MockClock",
    "RealClock",
    "Report",
    "ReportRow",
    "ScopedTimer",
    "SpanRecord",
    "StatEntry",
    "TicKey",
    "Timer",
    "TimerConfig",
    "TimerWarning",
    "aggregate",
    "choose_unit",
    "collect_warnings",
    "finalize",
    "parse_csv",
    "parse_json",
    "render",
    "unmatched_tics",
    "welford_update",
]
__version__ = "0.1.0"
