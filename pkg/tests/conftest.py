from fractions import Fraction

import pytest
from hypothesis import strategies as st

from indevents import kernels


def exact_probs(max_size=16, max_den=60, below_one=False):
    hi = Fraction(max_den - 1, max_den) if below_one else Fraction(1)
    return st.lists(
        st.fractions(min_value=0, max_value=hi, max_denominator=max_den),
        max_size=max_size,
    )


def float_probs(max_size=50, hi=0.99):
    return st.lists(st.floats(min_value=0.0, max_value=hi), max_size=max_size)


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
