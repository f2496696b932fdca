from __future__ import annotations

import sys

import pytest

from antikit import enumerate_feasible

from corpora import example_graph, forced_set_graph


@pytest.fixture
def example():
    return example_graph()


@pytest.fixture
def forced_set():
    return forced_set_graph()


@pytest.fixture
def example_family():
    return enumerate_feasible(example_graph())


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)
