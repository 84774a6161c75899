import numpy as np
import pytest

from kusuoka.distribution import build


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def u4():
    return build([(1, 0.25), (2, 0.25), (3, 0.25), (4, 0.25)])


@pytest.fixture
def u02():
    return build([(0, 0.5), (2, 0.5)])


@pytest.fixture
def u01():
    return build([(0, 0.5), (1, 0.5)])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
