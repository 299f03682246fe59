import json
import random
from pathlib import Path

import pytest

from rigcrystal import RiggedConfiguration, Weight, named, validate

FIXTURES = Path(__file__).parent / "fixtures"

# Cartan matrices used across the suite, as raw matrices
FIXTURE_MATRICES = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "C2": [[2, -2], [-1, 2]],
    "G2": [[2, -3], [-1, 2]],
    "G2t": [[2, -1], [-3, 2]],
    "H64": [[2, -6], [-4, 2]],
    "A1~": [[2, -2], [-2, 2]],
    "A2~": [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],
    "R3": [[2, -2, -3], [-2, 2, 0], [-3, 0, 2]],
    "B3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
}


@pytest.fixture
def A2():
    return named("A2")


@pytest.fixture
def a2_top():
    return json.loads((FIXTURES / "a2_binf_top.json").read_text())


def fundamental(A, *coeffs):
    return Weight.fundamental(A.labels, coeffs)


def random_walk(A, rng: random.Random, steps: int, hw=None):
    """Random f/e walk from the empty configuration, biased downwards."""
    rc = RiggedConfiguration.empty(A, hw)
    for _ in range(steps):
        a = rng.choice(A.labels)
        nxt = rc.f(a) if rng.random() < 0.75 else rc.e(a)
        if nxt is not None:
            rc = nxt
    return rc


# acceptance summary lines, filled by tests/test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def matrix(name):
    return validate(FIXTURE_MATRICES[name])
