import math

import numpy as np
import pytest

from oracles import fib_iterative
from tictoc import Timer
from tictoc.workloads import (
    fib_workload,
    gibbs_workload,
    parmap_inputs,
    run_fib,
    run_gibbs,
    run_overhead,
    run_parmap,
)


def counts(report):
    return {r.tag: r.count for r in report.rows}


def test_gibbs_counts_paper_shape():
    report = run_gibbs(100, 100)
    assert report.name == "gibbs_cpp_times"
    assert counts(report) == {"gibbs_cpp": 1, "inner_loop": 10000, "make_matrix": 1, "outer_loop": 100}
    assert report.tags == ["gibbs_cpp", "inner_loop", "make_matrix", "outer_loop"]


@pytest.mark.parametrize("n,thin", [(1, 1), (3, 5)])
def test_gibbs_counts_small(n, thin):
    assert counts(run_gibbs(n, thin)) == {
        "gibbs_cpp": 1, "inner_loop": n * thin, "make_matrix": 1, "outer_loop": n
    }


def test_gibbs_deterministic_draws():
    a = gibbs_workload(Timer(autoreturn=False, verbose=False), 5, 3)
    b = gibbs_workload(Timer(autoreturn=False, verbose=False), 5, 3)
    assert np.array_equal(a, b)


@pytest.mark.parametrize("n,thin", [(0, 1), (1, 0), (-1, 3)])
def test_gibbs_rejects_bad_params(n, thin):
    with pytest.raises(ValueError):
        run_gibbs(n, thin)


@pytest.mark.parametrize("n", [0, 1, 10, 20])
def test_fib_values(n):
    value, report = run_fib(n)
    assert value == fib_iterative(n)
    assert counts(report) == {"fib": 1}


def test_fib_memo_vs_naive():
    naive, naive_report = run_fib(30)
    memo, memo_report = run_fib(30, memo=True)
    assert naive == memo == fib_iterative(30) == 832040
    assert memo_report.row("fib_memo").mean <= naive_report.row("fib").mean


@pytest.mark.parametrize("n", [-1, 41])
def test_fib_range(n):
    with pytest.raises(ValueError):
        fib_workload(Timer(autoreturn=False, verbose=False), n)


@pytest.mark.parametrize("size,threads", [(1000, 1), (1000, 4), (1, 1), (7, 3)])
def test_parmap_count(size, threads):
    timer = Timer(autoreturn=False, verbose=False)
    from tictoc.workloads import parmap_workload

    out = parmap_workload(timer, size, threads)
    assert all(s.duration >= 0 for s in timer.raw_spans())
    assert np.allclose(out, [math.atan(v) for v in parmap_inputs(size)])
    assert counts(timer.stop()) == {"tictoc": size}
    assert not timer.diagnostics and not timer.unmatched_tics()


def test_parmap_rejects_bad_params():
    with pytest.raises(ValueError):
        run_parmap(0, 1)
    with pytest.raises(ValueError):
        run_parmap(10, 0)


def test_overhead():
    report = run_overhead(10**5)
    assert counts(report) == {"overhead": 10**5}
    assert report.row("overhead").min >= 0
    with pytest.raises(ValueError):
        run_overhead(99)
