import numpy as np
import pytest

from involut import Matrix

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20081212)


@pytest.fixture
def record():
    """Collect one PASS/FAIL line per acceptance criterion."""

    def _record(label, ok, detail=""):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def e(n, i, j):
    return Matrix.unit(n, i, j)
