from __future__ import annotations

import pytest

from pruferlab.harness import run_corpus


@pytest.fixture(scope="session")
def default_report():
    """One full harness run over the bundled corpus, shared across test modules."""
    return run_corpus()


def pytest_terminal_summary(terminalreporter):
    lines = getattr(terminalreporter.config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
