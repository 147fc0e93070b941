"""``tictoc-demo``: run an instrumented demo workload and print its report."""

from __future__ import annotations

import argparse
import os
import sys

from . import workloads
from .report import render
from .timer import Timer

FORMATS = ("table", "csv", "json")
UNITS = {"auto": None, "ns": "ns", "us": "us", "ms": "ms"}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # one line, exit 2
        self.exit(2, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    env_format = os.environ.get("TICTOC_FORMAT", "table")
    if env_format not in FORMATS:
        env_format = "table"

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=env_format,
                        help="output format (default: $TICTOC_FORMAT or table)")
    common.add_argument("--unit", choices=tuple(UNITS), default="auto",
                        help="table display unit")
    common.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--no-warnings", action="store_true", help="suppress misuse warnings")
    common.add_argument("--raw", action="store_true",
                        help="print tag,duration_ns for every span before aggregating")

    parser = _Parser(prog="tictoc-demo", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gibbs", parents=[common], help="Gibbs sampler loop nest")
    p.add_argument("--n", type=_positive_int, default=100)
    p.add_argument("--thin", type=_positive_int, default=100)

    p = sub.add_parser("fib", parents=[common], help="Fibonacci, naive or memoized")
    p.add_argument("--n", type=int, default=25)
    p.add_argument("--memo", action="store_true")

    p = sub.add_parser("parmap", parents=[common], help="parallel arctangent map")
    p.add_argument("--size", type=_positive_int, default=1000)
    p.add_argument("--threads", type=_positive_int, default=None,
                   help="worker threads (default: CPU count)")

    p = sub.add_parser("overhead", parents=[common], help="empty tic/toc pairs")
    p.add_argument("--pairs", type=_positive_int, default=100_000)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    timer = Timer(verbose=not args.no_warnings, autoreturn=False)
    note = None
    try:
        if args.command == "gibbs":
            timer.config.name = "gibbs_cpp_times"
            workloads.gibbs_workload(timer, args.n, args.thin)
        elif args.command == "fib":
            timer.config.name = "fib_times"
            value = workloads.fib_workload(timer, args.n, args.memo)
            note = f"fib({args.n}) = {value}"
        elif args.command == "parmap":
            workloads.parmap_workload(timer, args.size, args.threads)
        else:
            timer.config.name = "overhead_times"
            workloads.overhead_workload(timer, args.pairs)
            note = "mean = per-pair tic/toc overhead (machine-dependent)"
    except ValueError as exc:
        parser.error(str(exc))

    if args.raw:
        for span in timer.raw_spans():
            print(f"{span.tag},{span.duration}")
    report = timer.stop()

    text = render(report, args.format, unit=UNITS[args.unit])
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if note:
        # keep stdout machine-readable for csv/json
        to_stdout = args.format == "table" and not args.output
        print(note, file=sys.stdout if to_stdout else sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
