import pytest

_results: dict[str, list[str]] = {}
_order: list[str] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    label = marker.args[0]
    if label not in _results:
        _results[label] = []
        _order.append(label)
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results[label].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _order:
        return
    terminalreporter.section("acceptance criteria")
    for label in _order:
        outcomes = _results[label]
        ok = outcomes and all(o == "passed" for o in outcomes)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
