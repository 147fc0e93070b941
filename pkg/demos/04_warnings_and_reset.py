"""
Misuse warnings, incremental updates and reset
==============================================

Uses a mock clock so every number below is exact.
"""

from tictoc import MockClock, Timer, collect_warnings

clock = MockClock()
timer = Timer("demo", autoreturn=False, verbose=False, clock=clock)

timer.toc("never_started")          # toc without tic
timer.tic("left_open")              # tic without toc
timer.tic("twice")
clock.advance(100)
timer.toc("twice")
timer.toc("twice")                  # second toc: negative span, ignored

print(timer.stop())
for warning in collect_warnings(timer):
    print(warning)

# Later spans update the running statistics without revisiting old ones.
for d in (12250, 12251):
    timer.tic("tie")
    clock.advance(d)
    timer.toc("tie")
print(timer.stop().row("tie"))      # mean 12250.5 ns reported as 12.250 us

timer.reset()
print(timer.stop().rows)            # []
