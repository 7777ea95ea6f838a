import pytest

from flagrpp.shapes import Rpp, SkewShape

_acceptance: dict[str, str] = {}


def small_filling():
    return Rpp(SkewShape((5, 4, 3, 1), (2, 1)),
               ((1, 2, 3), (1, 1, 2), (1, 1, 3), (4,)), 4)


def yamanouchi_filling():
    return Rpp(SkewShape((4, 4, 3, 2), (2, 1)),
               ((1, 1), (1, 1, 2), (2, 2, 3), (2, 4)), 4)


@pytest.fixture
def small_rpp():
    return small_filling()


@pytest.fixture
def yamanouchi_rpp():
    return yamanouchi_filling()


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _acceptance[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(_acceptance.items(), key=lambda kv: int(kv[0].split("_")[2])):
        terminalreporter.write_line(f"{status}  {name}")
