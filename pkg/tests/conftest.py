from fractions import Fraction
from functools import reduce
from math import gcd

import pytest
from hypothesis import HealthCheck, assume, settings, strategies as st

from dmspectrum.covering import CoveringType
from dmspectrum.dataset import load_rows

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

F = Fraction


@pytest.fixture(scope="session")
def rows():
    return load_rows()


@pytest.fixture(scope="session")
def surface(rows):
    return [r for r in rows if r.ct.N == 5]


def row_ct(rows, index):
    return next(r.ct for r in rows if r.index == index)


@st.composite
def covering_types(draw, max_d=40, n_points=(4, 5, 6)):
    d = draw(st.integers(2, max_d))
    N = draw(st.sampled_from(n_points))
    a = draw(st.lists(st.integers(1, d - 1), min_size=N - 1, max_size=N - 1))
    last = (-sum(a)) % d
    assume(last != 0)
    a = a + [last]
    assume(reduce(gcd, a, d) == 1)
    return CoveringType(d, tuple(a))


@st.composite
def quintuples(draw, max_den=24):
    """Rational weights in (0, 1)^5 summing to 2, over a common denominator."""
    q = draw(st.integers(3, max_den))
    nums = draw(st.lists(st.integers(1, q - 1), min_size=4, max_size=4))
    last = 2 * q - sum(nums)
    assume(0 < last < q)
    return tuple(F(x, q) for x in nums + [last])


# Acceptance verdicts, one line per criterion, repeated in the terminal summary.
ACCEPTANCE = {}


def record_acceptance(number: int, ok: bool, detail: str):
    line = f"AC{number:>2} {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[number] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
