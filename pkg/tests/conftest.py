import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion covered by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    n, title = mark.args
    entry = _criteria.setdefault(n, {"title": title, "passed": True, "tests": 0})
    if rep.when == "call":
        entry["tests"] += 1
    if rep.failed or (rep.when == "setup" and rep.skipped):
        entry["passed"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        e = _criteria[n]
        verdict = "PASS" if e["passed"] and e["tests"] else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {verdict}  {e['title']}")


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
