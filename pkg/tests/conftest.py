import pytest

from cocoapoll import MarketParams, load_profiles
from cocoapoll.config import Config
from cocoapoll.core import profiles_by_key


@pytest.fixture(scope="session")
def profiles():
    return load_profiles()


@pytest.fixture(scope="session")
def by_key(profiles):
    return profiles_by_key(profiles)


@pytest.fixture(scope="session")
def market():
    return MarketParams()


@pytest.fixture(scope="session")
def config():
    return Config.load()


# -- acceptance summary: one line per criterion --------------------------------

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and not rep.failed:
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "passed": 0, "failed": []})
    if rep.passed and rep.when == "call":
        entry["passed"] += 1
    elif rep.failed:
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        status = "FAIL" if e["failed"] else "PASS"
        line = f"criterion {number:2d} {status}  {e['title']} ({e['passed']} checks passed"
        line += f", {len(e['failed'])} failed: {', '.join(e['failed'])})" if e["failed"] else ")"
        tr.write_line(line)
