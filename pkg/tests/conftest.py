"""Per-criterion PASS/FAIL reporting for tests marked ``criterion``."""
from collections import defaultdict

import pytest

_titles = {}
_outcomes = defaultdict(list)


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _titles[number] = title
            item.user_properties.append(("criterion", number))


def pytest_runtest_logreport(report):
    for key, value in report.user_properties:
        if key != "criterion":
            continue
        # a test fails the criterion if any phase fails; the call phase records the pass
        if report.failed:
            _outcomes[value].append(False)
        elif report.when == "call":
            _outcomes[value].append(not report.skipped)


def pytest_terminal_summary(terminalreporter):
    if not _titles:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_titles):
        results = _outcomes.get(number, [])
        ok = bool(results) and all(results)
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {_titles[number]}")


@pytest.fixture(scope="session")
def b3_21():
    from lascoux import generate_Bn

    return generate_Bn((2, 1), 3)
