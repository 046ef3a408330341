import pytest
from hypothesis import HealthCheck, settings

from jordanmaps import preset_field, rational_field

# Exact arithmetic has no meaningful per-example deadline: a single Gaussian
# elimination over Q with big numerators can blow any default budget.
settings.register_profile(
    "exact",
    deadline=None,
    max_examples=50,
    # Field objects are immutable, so sharing a function-scoped fixture
    # across generated examples is safe.
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def qq():
    return rational_field()


@pytest.fixture(scope="session")
def f2():
    return preset_field("F2")


@pytest.fixture(scope="session")
def f3():
    return preset_field("F3")


@pytest.fixture(scope="session")
def f5():
    return preset_field("F5")


@pytest.fixture(scope="session")
def f7():
    return preset_field("F7")


@pytest.fixture(scope="session")
def f9():
    return preset_field("F9")


# One human-readable line per acceptance criterion, printed in the terminal
# summary so a plain `pytest` run always shows the pass/fail ledger.
_acceptance_lines = []


@pytest.fixture(scope="session")
def acceptance_lines():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in _acceptance_lines:
        terminalreporter.write_line(line)
