from pathlib import Path

import pytest

from relequiv.spec_io import build_group, load_spec

GROUPS = Path(__file__).resolve().parent.parent / "groups"

# lines recorded by test_acceptance.py, echoed in the terminal summary
ACCEPTANCE_LINES = []


def group_path(name):
    return GROUPS / name


def load_group(name):
    spec = load_spec(GROUPS / name)
    return build_group(spec), spec


@pytest.fixture(scope="session")
def example():
    return load_group("z3xz3.json")[0]


@pytest.fixture(scope="session")
def example_spec():
    return load_spec(GROUPS / "z3xz3.json")


@pytest.fixture(scope="session")
def example_names(example_spec):
    return example_spec.variables


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
