import pytest

from hpexp.asymptotics import default_context
from hpexp.harness.acceptance import run_check


@pytest.fixture(scope="session")
def ctx():
    return default_context(256)


@pytest.fixture(scope="session")
def curves(ctx):
    return ctx.curves


ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance():
    """Runs each acceptance check once per precision and records its line."""
    cache = {}

    def result(key, precision_bits=256):
        if (key, precision_bits) not in cache:
            r = run_check(key, precision_bits)
            cache[key, precision_bits] = r
            if precision_bits == 256:
                ACCEPTANCE_LINES.append(r.line())
            print(r.line())
        return cache[key, precision_bits]

    return result


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
