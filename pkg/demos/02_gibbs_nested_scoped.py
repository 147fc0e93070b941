"""
Nested loops and scoped timers
==============================

The Gibbs sampler times the whole function with a scoped guard, the matrix
allocation with a tic/toc pair, and each level of the loop nest with its own
tag. Counts are deterministic because draws come from a seeded generator.
"""

from tictoc import Timer
from tictoc.workloads import gibbs_workload

timer = Timer("gibbs_cpp_times")
samples = gibbs_workload(timer, n=100, thin=100)
report = timer.stop()          # first stop() prints to stdout (autoreturn)

print({row.tag: row.count for row in report.rows})
print(samples[:3])
