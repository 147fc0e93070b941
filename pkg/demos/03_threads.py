"""
Timing from several threads
===========================

Each thread gets its own tic entries, so timers with the same tag never
match across threads; all spans land in the same statistics.
"""

from concurrent.futures import ThreadPoolExecutor

from tictoc import Timer

timer = Timer("threads", autoreturn=False)


def work(k):
    for _ in range(k):
        timer.tic("step")
        sum(range(200))
        timer.toc("step")


with ThreadPoolExecutor(max_workers=4) as pool:
    list(pool.map(work, [2500] * 4))

report = timer.stop()
print(report)
print("spans:", report.row("step").count)  # 10000
