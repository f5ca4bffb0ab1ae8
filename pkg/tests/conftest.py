import itertools

import pytest

from hddlogic.encode import Word

ACCEPTANCE_RESULTS = []


def all_words(width):
    return [Word(bits) for bits in itertools.product((0, 1), repeat=width)]


@pytest.fixture
def fig2_words():
    return Word.parse("1010"), Word.parse("1001")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
