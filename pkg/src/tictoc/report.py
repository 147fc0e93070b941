"""Finalized reports: rounding, unit choice, rendering and warnings."""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, TYPE_CHECKING, Iterable, Literal

from .aggregation import StatEntry, aggregate, unmatched_tics

if TYPE_CHECKING:
    from .timer import Timer

Unit = Literal["ns", "us", "ms"]
Format = Literal["table", "csv", "json"]

UNIT_HEADERS = {"ns": "Nanoseconds", "us": "Microseconds", "ms": "Milliseconds"}
# nanoseconds per display unit, and decimals needed to keep whole-ns precision
_UNIT_SCALE = {"ns": 1, "us": 1_000, "ms": 1_000_000}
_UNIT_DECIMALS = {"ns": 0, "us": 3, "ms": 6}

CSV_HEADER = ("tag", "mean_us", "sd_us", "min_us", "max_us", "count")

WARNING_KINDS = ("missing_tic", "needless_toc", "unmatched_tic")
_WARNING_TEXT = {
    "missing_tic": "toc('{tag}') was called without a matching tic; no time was recorded",
    "needless_toc": "toc('{tag}') was called more than once after a single tic; extra tocs were ignored",
    "unmatched_tic": "tic('{tag}') was never matched by a toc",
}


@dataclass(frozen=True)
class ReportRow:
    """One tag's statistics in microseconds, each a whole number of nanoseconds."""

    tag: str
    mean: float
    sd: float
    min: float
    max: float
    count: int

    @classmethod
    def from_stats(cls, tag: str, entry: StatEntry) -> ReportRow:
        sd_ns = math.sqrt(entry.variance)
        # round() on floats is round-half-to-even
        return cls(
            tag,
            round(entry.mean) / 1000,
            round(sd_ns) / 1000,
            round(entry.min) / 1000,
            round(entry.max) / 1000,
            entry.count,
        )

    def values_ns(self) -> tuple[int, int, int, int]:
        return tuple(round(v * 1000) for v in (self.mean, self.sd, self.min, self.max))


@dataclass
class Report:
    name: str
    rows: list[ReportRow] = field(default_factory=list)
    display_unit: Unit | None = None

    def __post_init__(self) -> None:
        self.rows = sorted(self.rows, key=lambda r: r.tag)
        if self.display_unit is None:
            self.display_unit = choose_unit(self.rows)

    def row(self, tag: str) -> ReportRow:
        for r in self.rows:
            if r.tag == tag:
                return r
        raise KeyError(tag)

    @property
    def tags(self) -> list[str]:
        return [r.tag for r in self.rows]

    def render(self, format: Format = "table", unit: Unit | None = None) -> str:
        return render(self, format, unit=unit)

    def __str__(self) -> str:
        return render(self, "table")


@dataclass(frozen=True)
class TimerWarning:
    kind: str
    tag: str

    @property
    def message(self) -> str:
        return _WARNING_TEXT[self.kind].format(tag=self.tag)

    def __str__(self) -> str:
        return f"Warning [{self.kind}]: {self.message}"


def choose_unit(rows: Iterable[ReportRow]) -> Unit:
    """Nanoseconds if every row's max is under 1 us, otherwise microseconds.

    Milliseconds are never picked automatically; pass ``unit="ms"`` to
    :func:`render` to get them.
    """
    rows = list(rows)
    if rows and all(r.max < 1 for r in rows):
        return "ns"
    return "us"


def build_report(name: str, stats: dict[str, StatEntry]) -> Report:
    rows = [ReportRow.from_stats(tag, entry) for tag, entry in stats.items()]
    return Report(name, rows)


def finalize(timer: Timer) -> Report:
    """Aggregate pending spans and produce the timer's report.

    The first call on a timer with ``autoreturn`` writes the report to the
    configured sink; with ``verbose``, warnings not yet shown go to stderr.
    """
    stats = aggregate(timer)
    report = build_report(timer.config.name, stats)
    if timer.config.autoreturn and not timer._returned:
        timer._returned = True
        write_report(report, timer.config.sink)
    if timer.config.verbose:
        emit_warnings(timer)
    return report


def collect_warnings(timer: Timer) -> list[TimerWarning]:
    """All current misuse warnings, ordered by kind then tag."""
    by_kind = {
        "missing_tic": timer.diagnostics.missing_tics,
        "needless_toc": timer.diagnostics.needless_tocs,
        "unmatched_tic": unmatched_tics(timer),
    }
    return [TimerWarning(kind, tag) for kind in WARNING_KINDS for tag in sorted(by_kind[kind])]


def emit_warnings(timer: Timer, stream: IO[str] | None = None) -> list[TimerWarning]:
    """Write warnings not already shown for this timer; return them."""
    stream = stream if stream is not None else sys.stderr
    fresh = [w for w in collect_warnings(timer) if (w.kind, w.tag) not in timer._warned]
    for w in fresh:
        timer._warned.add((w.kind, w.tag))
        print(w, file=stream)
    return fresh


def _fmt(value_us: float, unit: Unit) -> str:
    ns = round(value_us * 1000)
    if unit == "ns":
        return str(ns)
    return f"{ns / _UNIT_SCALE[unit]:.{_UNIT_DECIMALS[unit]}f}"


def render(report: Report, format: Format = "table", unit: Unit | None = None) -> str:
    """Render as a text table, CSV or JSON.

    ``unit`` only affects the table; CSV and JSON always carry microseconds.
    """
    if format == "table":
        return _render_table(report, unit or report.display_unit)
    if format == "csv":
        return _render_csv(report)
    if format == "json":
        return _render_json(report)
    raise ValueError(f"unknown format {format!r}")


def _render_table(report: Report, unit: Unit) -> str:
    header = ["", UNIT_HEADERS[unit], "SD", "Min", "Max", "Count"]
    body = [
        [r.tag, *(_fmt(v, unit) for v in (r.mean, r.sd, r.min, r.max)), str(r.count)]
        for r in report.rows
    ]
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
    lines = []
    for line in [header, *body]:
        cells = [line[0].ljust(widths[0])]
        cells += [cell.rjust(w) for cell, w in zip(line[1:], widths[1:])]
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _render_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in report.rows:
        writer.writerow([r.tag, *(_fmt(v, "us") for v in (r.mean, r.sd, r.min, r.max)), r.count])
    return buf.getvalue()


def _render_json(report: Report) -> str:
    doc = {
        "name": report.name,
        "unit": "microseconds",
        "rows": [
            {"tag": r.tag, "mean": r.mean, "sd": r.sd, "min": r.min, "max": r.max, "count": r.count}
            for r in report.rows
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_csv(text: str, name: str = "times") -> Report:
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader))
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    rows = [
        ReportRow(tag, *(round(float(v) * 1000) / 1000 for v in vals), int(count))
        for tag, *vals, count in reader
    ]
    return Report(name, rows)


def parse_json(text: str) -> Report:
    doc = json.loads(text)
    if doc.get("unit") != "microseconds":
        raise ValueError(f"unsupported unit {doc.get('unit')!r}")
    rows = [
        ReportRow(d["tag"], float(d["mean"]), float(d["sd"]), float(d["min"]), float(d["max"]), int(d["count"]))
        for d in doc["rows"]
    ]
    return Report(doc["name"], rows)


def write_report(report: Report, sink: str | Path | IO[str] | None = None) -> None:
    """Write ``report`` to a stream, a file path, or stdout (``None``)."""
    if sink is None or hasattr(sink, "write"):
        stream = sink if sink is not None else sys.stdout
        stream.write(f"{report.name}\n{render(report, 'table')}")
        return
    path = Path(sink)
    suffix = path.suffix.lower()
    if suffix == ".csv":
        text = render(report, "csv")
    elif suffix == ".json":
        text = render(report, "json")
    else:
        text = f"{report.name}\n{render(report, 'table')}"
    path.write_text(text)
