import re

_CRITERIA: dict[int, bool] = {}
_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = _PATTERN.search(report.nodeid)
    if match is None:
        return
    num = int(match.group(1))
    _CRITERIA[num] = _CRITERIA.get(num, True) and report.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        verdict = "PASS" if _CRITERIA[num] else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {verdict}")
