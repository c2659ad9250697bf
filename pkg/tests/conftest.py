import random

import pytest
from hypothesis import strategies as st

PAPER_A = [1, 2, 5, 2, 5, 3]
PAPER_B = [2, 4, 5, 2, 3, 4]


def small_seqs(max_len=12, max_sym=4):
    return st.lists(st.integers(0, max_sym), max_size=max_len)


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
