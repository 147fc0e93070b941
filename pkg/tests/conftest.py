import io
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tictoc import MockClock, Timer

_criteria: list[tuple[str, str]] = []


@pytest.fixture
def clock():
    return MockClock(0)


@pytest.fixture
def timer(clock):
    return Timer(autoreturn=False, verbose=False, clock=clock)


@pytest.fixture
def sink():
    return io.StringIO()


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _criteria.append(("PASS" if report.passed else "FAIL", name))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for status, name in _criteria:
        terminalreporter.write_line(f"{status}  {name}")
