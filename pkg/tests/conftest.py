from __future__ import annotations

from collections import defaultdict

import pytest

from ksroots import e6ext, roots

_CRITERIA: dict[int, list[tuple[str, str]]] = defaultdict(list)


def pytest_configure(config) -> None:
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.fixture(scope="session")
def systems():
    return {s: roots.configuration(s) for s in roots.SYSTEMS}


@pytest.fixture(scope="session")
def a_tilde():
    return e6ext.build_a_tilde()


@pytest.fixture(scope="session")
def a_hat():
    return e6ext.build_a_hat()


@pytest.fixture(scope="session")
def ledger(a_tilde):
    return e6ext.replay_uniqueness_proof(a_tilde)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[marker.args[0]].append((item.name, report.outcome))


def pytest_terminal_summary(terminalreporter) -> None:
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        results = _CRITERIA[n]
        bad = [name for name, outcome in results if outcome != "passed"]
        verdict = "PASS" if not bad else "FAIL"
        line = f"criterion {n:2d}: {verdict} ({len(results) - len(bad)}/{len(results)} checks)"
        if bad:
            line += " failing: " + ", ".join(bad)
        tr.write_line(line)
