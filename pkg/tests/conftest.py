import random

import pytest

from oneplanar import construct as cs
from oneplanar.drawing import OnePlaneDrawing, planar_drawing
from oneplanar.graph import SimpleGraph, complete, cycle, path


@pytest.fixture(scope="session")
def k2222():
    return cs.gen_k2222()


@pytest.fixture(scope="session")
def odd_pair():
    return cs.gen_odd_pair(14)


@pytest.fixture(scope="session")
def chain3():
    return cs.chain([cs.gen_k2222()] * 3)


@pytest.fixture
def rng():
    return random.Random(7)


def plane(g: SimpleGraph) -> OnePlaneDrawing:
    return planar_drawing(g)


@pytest.fixture
def triangle():
    return plane(cycle(3))


@pytest.fixture
def k4():
    return plane(complete(4))


@pytest.fixture
def p3():
    return plane(path(3))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
