import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=300, deadline=None)
settings.load_profile("default")

nonzero_ints = st.integers(-10**6, 10**6).filter(bool)
rationals = st.builds(Fraction, st.integers(-10**6, 10**6), nonzero_ints)
nonzero_rationals = st.builds(Fraction, nonzero_ints, nonzero_ints)
negative_valuation = st.builds(
    lambda a, b, k: Fraction(2 * a + 1, (2 * b + 1) << k),
    st.integers(-10**4, 10**4), st.integers(0, 10**4), st.integers(1, 12),
)


@pytest.fixture
def rng():
    return random.Random(20240517)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
