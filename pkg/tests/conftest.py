import random

import pytest
from hypothesis import strategies as st

from chordspan.graph_core import MopGraph, subdivide

ACCEPTANCE_LINES: list[str] = []


@st.composite
def mops(draw, min_n=3, max_n=30):
    """Random graphs grown from a triangle by subdividing drawn cycle edges."""
    n = draw(st.integers(min_n, max_n))
    g = MopGraph(3, ())
    while g.n < n:
        a = draw(st.integers(0, g.n - 1))
        g = subdivide(g, (a, (a + 1) % g.n))
    return g


@pytest.fixture
def rng():
    return random.Random(20241016)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.call_report = rep


@pytest.fixture
def record(request):
    """Set a one-line detail; a PASS/FAIL line is logged and printed once the test finishes."""
    detail = [""]
    yield lambda text: detail.__setitem__(0, text)
    rep = getattr(request.node, "call_report", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    line = f"{status} {request.node.name}: {detail[0]}"
    ACCEPTANCE_LINES.append(line)
    print(line)
