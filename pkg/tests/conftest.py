import os
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

_CRITERIA: dict[str, list[bool]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    # parametrised cases of one criterion share a line
    name = report.nodeid.split("::")[-1].split("[")[0]
    if report.when == "call" or report.outcome != "passed":
        _CRITERIA.setdefault(name, []).append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        results = _CRITERIA[name]
        status = "PASS" if all(results) else "FAIL"
        label = name[len("test_criterion_"):].replace("_", " ")
        terminalreporter.write_line(f"{status}  criterion {label}  ({sum(results)}/{len(results)} cases)")
