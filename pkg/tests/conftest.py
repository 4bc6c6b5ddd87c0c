import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from judicious import MultiHypergraph

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def triangle():
    # vertex 0 is isolated so the named vertices keep their ids
    return MultiHypergraph(4, [(1, 2), (2, 3), (1, 3)])


@pytest.fixture
def k4_3():
    return MultiHypergraph(5, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])


@st.composite
def hypergraphs(draw, max_n=8, max_m=12, rank=None):
    n = draw(st.integers(1 if rank is None else rank, max_n))
    sizes = st.just(rank) if rank is not None else st.integers(1, n)
    edges = []
    for _ in range(draw(st.integers(0, max_m))):
        k = draw(sizes)
        edges.append(draw(st.lists(st.integers(0, n - 1), min_size=k, max_size=k, unique=True)))
    return MultiHypergraph(n, edges)


@st.composite
def hypergraph_and_subset(draw, **kwargs):
    H = draw(hypergraphs(**kwargs))
    S = draw(st.sets(st.integers(0, H.n - 1)))
    return H, S


# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
