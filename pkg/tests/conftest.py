import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from corpus_fixture import build_corpus  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def identifying_corpus(corpus):
    from hexid.codes import verify_identifying
    return [c for c in corpus if verify_identifying(c, 2)]


@pytest.fixture(scope="session")
def record():
    return ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
