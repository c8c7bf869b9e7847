import pytest

from brandtkit.analysis import analyze

_cache = {}

# one "ACCEPTANCE k (...): PASS/FAIL" line per criterion, shown at the end
ACCEPTANCE_LINES = []


def cached_analysis(N, **kwargs):
    """One full pipeline run per (level, options), shared by all tests."""
    key = (N, tuple(sorted(kwargs.items())))
    if key not in _cache:
        _cache[key] = analyze(N, **kwargs)
    return _cache[key]


@pytest.fixture(scope="session")
def pipeline():
    return cached_analysis


def pytest_runtest_logreport(report):
    if report.when != "call" or not report.failed:
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_acceptance_"):
        return
    parts = name[len("test_acceptance_"):].split("_")
    ACCEPTANCE_LINES.append(
        f"ACCEPTANCE {int(parts[0])} ({' '.join(parts[1:])}): FAIL")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
