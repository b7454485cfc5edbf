import os
from itertools import product

import hypothesis
import pytest

from polycomb.pointset import PointSet

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def cube(d):
    return PointSet(d, tuple(product((0, 1), repeat=d)))


@pytest.fixture
def square():
    return cube(2)


@pytest.fixture
def cube3():
    return cube(3)


@pytest.fixture
def simplex3():
    return PointSet(3, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)))


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
