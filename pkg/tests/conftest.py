import random

import pytest

from gmnconj import GroupContext

PARAMS = [(2, 2), (2, 3), (3, 4)]


@pytest.fixture
def g22():
    return GroupContext(2, 2)


@pytest.fixture(params=PARAMS, ids=lambda p: f"m{p[0]}n{p[1]}")
def ctx(request):
    return GroupContext(*request.param)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    from tests import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
