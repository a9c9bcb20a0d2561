import pytest

from shufflebits import _backend

BACKENDS = _backend.available()

_criteria: dict[int, dict] = {}


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (report.when != "call" and report.passed):
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "passed": True, "failures": []})
    if report.failed:
        entry["passed"] = False
        entry["failures"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["passed"] else "FAIL"
        line = f"AC{number:02d} {status}  {entry['title']}"
        if entry["failures"]:
            line += "  (failed: " + ", ".join(entry["failures"]) + ")"
        terminalreporter.write_line(line)
