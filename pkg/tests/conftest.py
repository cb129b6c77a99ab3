"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""
import re

_results = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_c(\d+)_(\w+)", report.nodeid)
    if not m or (report.when != "call" and report.passed):
        return
    num = int(m.group(1))
    prev = _results.get(num)
    if prev and prev[0] == "FAIL":
        return
    _results[num] = ("PASS" if report.passed else "FAIL", m.group(2), dict(report.user_properties))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_results):
        status, name, props = _results[num]
        detail = props.get("detail", "")
        tr.write_line(f"criterion {num:2d} {status}  {name}" + (f": {detail}" if detail else ""))
        for key, val in props.items():
            if key.startswith("sub:"):
                tr.write_line(f"    {key[4:]}: {val}")
    passed = sum(1 for s, _, _ in _results.values() if s == "PASS")
    tr.write_line(f"{passed}/{len(_results)} acceptance criteria pass")
