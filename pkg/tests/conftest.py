import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gfsums.exact import GaussianRational, Rational
from gfsums.fib import Seeds

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_ints = st.integers(min_value=-30, max_value=30)
rationals = st.builds(Rational, small_ints, st.integers(min_value=1, max_value=12))
gaussians = st.builds(GaussianRational, rationals, rationals)
seed_pairs = st.builds(Seeds, rationals, rationals)


@pytest.fixture
def lucas():
    return Seeds(2, 1)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.summary_lines():
            terminalreporter.write_line(line)
