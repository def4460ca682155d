import pytest

_results: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, label = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _results[n] = ("PASS" if report.passed else "FAIL", label)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        status, label = _results[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {label}")
