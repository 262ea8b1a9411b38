"""Shared fixtures and the acceptance-line terminal summary."""

import numpy as np
import pytest

from expsumlab import FunctionSpec, get_evaluator

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def lam_evaluator():
    ev = get_evaluator(FunctionSpec.liouville())
    ev.ensure(1, 300_000)
    return ev


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260814)
