import pytest

from borelred.matrix import Quadruple
from helpers import mat, vec

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def running():
    """The n=2 example used throughout: a point of the rss zero fiber."""
    return Quadruple(mat([[1, 1], [0, 2]]), mat([[0, 0], [-1, 0]]), vec([1, 1]), vec([1, -1]))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
