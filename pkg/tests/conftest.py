import re

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_outcomes = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.failed:
        prev = _outcomes.get(key)
        _outcomes[key] = "FAIL" if report.failed or prev == "FAIL" else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for (n, name), outcome in sorted(_outcomes.items()):
        terminalreporter.write_line(f"criterion {n:2d} {name.replace('_', ' ')}: {outcome}")
    passed = sum(o == "PASS" for o in _outcomes.values())
    terminalreporter.write_line(f"{passed}/{len(_outcomes)} criteria pass")
