from fractions import Fraction

import hypothesis
import pytest
from hypothesis import strategies as st

from topolab import core
from topolab.realline import NEG_INF, POS_INF, interval_set

hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=25, deadline=None)
hypothesis.settings.load_profile("default")


# -- finite spaces -----------------------------------------------------------

@st.composite
def spaces(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    sub = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=6))
    return core.generate(n, sub)


@st.composite
def space_and_set(draw, max_n=5):
    s = draw(spaces(max_n=max_n))
    return s, draw(st.integers(0, s.full))


# -- interval sets -----------------------------------------------------------

rationals = st.builds(Fraction, st.integers(-8, 8), st.sampled_from([1, 2, 3]))


@st.composite
def pieces(draw):
    lo = draw(rationals)
    if draw(st.integers(0, 5)) == 0:
        return (lo, True, lo, True)
    hi = lo + draw(st.builds(Fraction, st.integers(1, 6), st.sampled_from([1, 2])))
    if draw(st.integers(0, 9)) == 0:
        lo = NEG_INF
    if draw(st.integers(0, 9)) == 0:
        hi = POS_INF
    return (lo, draw(st.booleans()), hi, draw(st.booleans()))


interval_sets = st.lists(pieces(), max_size=4).map(interval_set)


# -- acceptance summary ------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion."""
    def record(label: str, passed: bool, detail: str = ""):
        ACCEPTANCE_LINES.append(f"{'PASS' if passed else 'FAIL'}  {label}"
                                + (f"  [{detail}]" if detail else ""))
        assert passed, f"{label}: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
