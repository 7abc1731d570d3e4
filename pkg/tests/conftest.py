import re

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed:
        _ACCEPTANCE[name] = _ACCEPTANCE.get(name, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        m = re.match(r"test_criterion_(\d+)_(.*)", name)
        label = f"criterion {int(m.group(1))}: {m.group(2).replace('_', ' ')}" if m else name
        terminalreporter.write_line(f"{'PASS' if _ACCEPTANCE[name] else 'FAIL'} {label}")
