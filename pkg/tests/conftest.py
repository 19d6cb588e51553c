import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gammaspace.finset import validate_topology  # noqa: E402
from gammaspace.worked import load_example  # noqa: E402

A, B, C, D = 1, 2, 4, 8

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def ex1():
    return load_example("Example1")


@pytest.fixture(scope="session")
def ex2():
    return load_example("Example2")


@pytest.fixture(scope="session")
def reg_example():
    return load_example("RegularExample")


@pytest.fixture(scope="session")
def normal_example():
    return load_example("NormalExample")


@pytest.fixture(scope="session")
def ex1_topology():
    return validate_topology([0, A, B, A | B, A | B | C], 3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
