from __future__ import annotations

import pytest


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    # every test gets its own cache so nothing leaks between runs
    monkeypatch.setenv("TROPICOUNT_CACHE", str(tmp_path / "cache"))
    monkeypatch.delenv("TROPICOUNT_JOBS", raising=False)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, line
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(line(n))
