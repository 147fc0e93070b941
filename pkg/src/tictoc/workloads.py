"""Deterministic demo workloads instrumented with a :class:`Timer`.

Each ``*_workload`` function records into a caller-supplied timer and
returns its computed result; the matching ``run_*`` helper builds a quiet
timer, runs the workload and returns the finalized report.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

import numpy as np

from .report import Report
from .timer import Timer

GIBBS_SEED = 20240512
PARMAP_SEED = 1000
FIB_MAX = 40


def _positive(**params: int) -> None:
    for key, value in params.items():
        if int(value) != value or value < 1:
            raise ValueError(f"{key} must be a positive integer, got {value!r}")


def _quiet_timer(name: str) -> Timer:
    return Timer(name, verbose=False, autoreturn=False)


def gibbs_workload(timer: Timer, n: int, thin: int, seed: int = GIBBS_SEED) -> np.ndarray:
    """Gibbs sampler for the bivariate gamma/normal example, timed per loop.

    Draws come from a PCG64 generator seeded with ``seed``, so the control
    flow (and every Count) is identical across runs and platforms.
    """
    _positive(n=n, thin=thin)
    rng = np.random.Generator(np.random.PCG64(seed))
    with timer.scoped("gibbs_cpp"):
        timer.tic("make_matrix")
        mat = np.empty((n, 2))
        timer.toc("make_matrix")
        x = y = 0.0
        for i in range(n):
            timer.tic("outer_loop")
            for _ in range(thin):
                timer.tic("inner_loop")
                x = rng.gamma(3.0, 1.0 / (y * y + 4.0))
                y = rng.normal(1.0 / (x + 1.0), 1.0 / math.sqrt(2.0 * (x + 1.0)))
                timer.toc("inner_loop")
            mat[i, 0] = x
            mat[i, 1] = y
            timer.toc("outer_loop")
    return mat


def run_gibbs(n: int = 100, thin: int = 100) -> Report:
    timer = _quiet_timer("gibbs_cpp_times")
    gibbs_workload(timer, n, thin)
    return timer.stop()


def fib_naive(n: int) -> int:
    return n if n < 2 else fib_naive(n - 1) + fib_naive(n - 2)


@lru_cache(maxsize=None)
def _fib_memo(n: int) -> int:
    return n if n < 2 else _fib_memo(n - 1) + _fib_memo(n - 2)


def fib_memo(n: int) -> int:
    _fib_memo.cache_clear()
    return _fib_memo(n)


def fib_workload(timer: Timer, n: int, memo: bool = False) -> int:
    """Time one top-level Fibonacci call under tag ``fib`` or ``fib_memo``."""
    if int(n) != n or not 0 <= n <= FIB_MAX:
        raise ValueError(f"n must be an integer in [0, {FIB_MAX}], got {n!r}")
    tag, fn = ("fib_memo", fib_memo) if memo else ("fib", fib_naive)
    timer.tic(tag)
    value = fn(n)
    timer.toc(tag)
    return value


def run_fib(n: int = 25, memo: bool = False) -> tuple[int, Report]:
    timer = _quiet_timer("fib_times")
    value = fib_workload(timer, n, memo)
    return value, timer.stop()


def default_threads() -> int:
    return os.cpu_count() or 1


def parmap_inputs(size: int, seed: int = PARMAP_SEED) -> np.ndarray:
    return np.random.Generator(np.random.PCG64(seed)).standard_normal(size)


def parmap_workload(timer: Timer, size: int, threads: int | None = None) -> np.ndarray:
    """Arctangent of ``size`` inputs across ``threads`` workers.

    Every element is timed with the default tag from whichever worker
    handles it.
    """
    threads = default_threads() if threads is None else threads
    _positive(size=size, threads=threads)
    x = parmap_inputs(size)
    out = np.empty_like(x)
    values = x.tolist()

    def work(lo: int, hi: int) -> None:
        for i in range(lo, hi):
            timer.tic()
            out[i] = math.atan(values[i])
            timer.toc()

    bounds = np.linspace(0, size, threads + 1).astype(int)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(work, lo, hi) for lo, hi in zip(bounds[:-1], bounds[1:])]
        for f in futures:
            f.result()
    return out


def run_parmap(size: int = 1000, threads: int | None = None) -> Report:
    timer = _quiet_timer("times")
    parmap_workload(timer, size, threads)
    return timer.stop()


def overhead_workload(timer: Timer, pairs: int) -> None:
    """``pairs`` back-to-back empty tic/toc pairs."""
    if int(pairs) != pairs or pairs < 100:
        raise ValueError(f"pairs must be an integer >= 100, got {pairs!r}")
    tic, toc = timer.tic, timer.toc
    for _ in range(pairs):
        tic("overhead")
        toc("overhead")


def run_overhead(pairs: int = 100_000) -> Report:
    timer = _quiet_timer("overhead_times")
    overhead_workload(timer, pairs)
    return timer.stop()
