import sys
from collections import defaultdict
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

FIXTURE_DIR = Path(__file__).parent / "fixtures"

_criteria: dict[int, str] = {}
_outcomes: dict[int, list[bool]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion this test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            _criteria[m.args[0]] = m.args[1]
            item.user_properties.append(("criterion", m.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.failed:
        _outcomes[crit].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        res = _outcomes.get(n)
        if res:
            status = "PASS" if all(res) else "FAIL"
            terminalreporter.write_line(f"criterion {n:2d} {_criteria[n]}: {status} ({len(res)} checks)")


@pytest.fixture
def fixture_dir():
    return FIXTURE_DIR
