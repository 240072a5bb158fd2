from __future__ import annotations

import pytest

from twofold.graph import Graph, is_bipartite, is_connected, is_reduced
from twofold.oracle import corpus


@pytest.fixture(scope="session")
def corpus7() -> list[Graph]:
    return corpus(7)


@pytest.fixture(scope="session")
def corpus6(corpus7) -> list[Graph]:
    return [g for g in corpus7 if g.n <= 6]


@pytest.fixture(scope="session")
def reduced6(corpus6) -> list[Graph]:
    return [g for g in corpus6 if g.n > 0 and is_reduced(g)]


@pytest.fixture(scope="session")
def census6(reduced6) -> list[Graph]:
    return [g for g in reduced6 if is_connected(g) and not is_bipartite(g)]


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")
    config._criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    table = item.config._criteria
    prev = table.get(num, (title, "PASS", []))
    status = prev[1]
    notes = prev[2] + (list(getattr(item, "criterion_notes", [])) if rep.when == "call" else [])
    if rep.failed:
        status = "FAIL"
    table[num] = (title, status, notes)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    table = getattr(config, "_criteria", {})
    if not table:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(table):
        title, status, notes = table[num]
        extra = f" [{'; '.join(notes)}]" if notes else ""
        terminalreporter.write_line(f"criterion {num:2d} {status}: {title}{extra}")
