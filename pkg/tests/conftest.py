import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from skewperm.formats import read_graph6_file
from skewperm.graph import Graph, OrientedGraph, orient

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def load_catalog(name: str) -> list[Graph]:
    return read_graph6_file(DATA / name)


@pytest.fixture(scope="session")
def atlas():
    """Every graph on 0..7 vertices up to isomorphism."""
    return load_catalog("graphs_upto7.g6")


@pytest.fixture(scope="session")
def connected():
    return load_catalog("connected_upto7.g6")


@pytest.fixture(scope="session")
def trees():
    return load_catalog("trees_upto8.g6")


# a few named graphs ----------------------------------------------------------

K2 = Graph(2, [(0, 1)])
P3 = Graph(3, [(0, 1), (1, 2)])
C3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
K4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
BOWTIE = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
STAR3 = Graph(4, [(0, 1), (0, 2), (0, 3)])
C6 = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])

C4_CYCLIC = orient(C4, [(0, 1), (1, 2), (2, 3), (3, 0)])  # evenly oriented
C4_ODD = orient(C4, [(0, 1), (1, 2), (2, 3), (0, 3)])  # one arc reversed


# hypothesis strategies -------------------------------------------------------


@st.composite
def graphs(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def oriented_graphs(draw, max_n=7, min_n=0):
    g = draw(graphs(max_n=max_n, min_n=min_n))
    bits = draw(st.integers(0, (1 << g.m) - 1)) if g.m else 0
    return OrientedGraph(g, bits)


@st.composite
def skew_int_matrices(draw, max_n=6, lo=-5, hi=5):
    n = draw(st.integers(0, max_n))
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = draw(st.integers(lo, hi))
            a[i][j], a[j][i] = x, -x
    return a


@st.composite
def int_matrices(draw, max_n=6, lo=-4, hi=4):
    n = draw(st.integers(0, max_n))
    return [[draw(st.integers(lo, hi)) for _ in range(n)] for _ in range(n)]


# acceptance summary ------------------------------------------------------------

_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.failed:
        _acceptance.append((report.nodeid.split("::")[-1], "error"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        _, _, num, *words = name.split("_")
        terminalreporter.write_line(f"criterion {int(num):>2} ({' '.join(words)}): {verdict}")
