"""
Timing a loop with tic/toc
==========================

A single timer with the default tag, started and stopped around each
element of a loop. Leaving the ``with`` block prints the report.
"""

import math

import numpy as np

from tictoc import Timer

x = np.random.default_rng(1).standard_normal(1000)

with Timer() as timer:
    for i, value in enumerate(x):
        timer.tic()
        x[i] = math.atan(value)
        timer.toc()

# Every call was under a microsecond or so, so the table may switch to
# nanoseconds. The machine-readable forms always use microseconds:
print(timer.stop().render("csv"))
