from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from spehlab.core import Multisegment, Segment

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def segments(draw, lo=-3, hi=3, max_len=4, halves=True):
    b = Fraction(draw(st.integers(lo, hi)))
    if halves and draw(st.booleans()):
        b += Fraction(1, 2)
    n = draw(st.integers(1, max_len))
    return Segment("rho", b, b + n - 1)


@st.composite
def multisegments(draw, max_size=5, **kw):
    return Multisegment(draw(st.lists(segments(**kw), max_size=max_size)))


@st.composite
def integral_multisegments(draw, max_size=5, lo=-2, hi=2, max_len=3):
    return Multisegment(draw(st.lists(segments(lo=lo, hi=hi, max_len=max_len, halves=False), max_size=max_size)))
