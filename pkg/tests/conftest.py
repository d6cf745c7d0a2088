import random
import sys

import pytest

from actsched import _backend


@pytest.fixture(params=_backend.available())
def backend(request):
    """Run the test once per importable kernel backend."""
    with _backend.use(request.param):
        yield request.param


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.format_line(number))
