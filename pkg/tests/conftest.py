import pytest
from hypothesis import strategies as st

from coeven.graph import Graph

ACCEPTANCE_RESULTS: dict[str, str] = {}


def edges(n, pairs):
    return Graph.from_edges(n, pairs)


C4 = edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
K4 = edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
K3 = edges(3, [(0, 1), (0, 2), (1, 2)])
K2 = edges(2, [(0, 1)])
K1 = Graph.empty(1)
TWO_K1 = Graph.empty(2)
P3 = edges(3, [(0, 1), (1, 2)])
P4 = edges(4, [(1, 2), (2, 3), (3, 0)])  # C4 minus {0,1}
P5 = edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
K3_K2 = edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)])
STAR3 = edges(4, [(0, 1), (0, 2), (0, 3)])


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


@pytest.fixture
def named():
    return {"C4": C4, "K4": K4, "K3": K3, "K2": K2, "K1": K1, "2K1": TWO_K1, "P3": P3, "P5": P5}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{ACCEPTANCE_RESULTS[name]}  {name}")
