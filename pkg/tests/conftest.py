import pytest
from hypothesis import settings, strategies as st

from tourmat.boolmat import BoolMatrix
from tourmat.gen import worked_example
from tourmat.majority import from_edges

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

# criterion name -> "PASS" / "FAIL", filled in by the acceptance tests
ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def fixture():
    return worked_example()


@st.composite
def matrices(draw, min_n=1, max_n=16):
    n = draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return BoolMatrix(n, tuple(rows))


@st.composite
def same_size(draw, count, max_n=12):
    n = draw(st.integers(1, max_n))
    row = st.integers(0, (1 << n) - 1)
    return tuple(
        BoolMatrix(n, tuple(draw(st.lists(row, min_size=n, max_size=n)))) for _ in range(count)
    )


@st.composite
def structures(draw, min_n=1, max_n=8, ties=True):
    """Majority structures: each pair dominated either way or, if allowed, tied."""
    n = draw(st.integers(min_n, max_n))
    choices = (0, 1, 2) if ties else (0, 1)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            c = draw(st.sampled_from(choices))
            if c == 0:
                edges.append((i, j))
            elif c == 1:
                edges.append((j, i))
    return from_edges(n, edges)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion this test decides")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or not (rep.when == "call" or rep.failed):
        return
    name = marker.args[0]
    if ACCEPTANCE.get(name) != "FAIL":
        ACCEPTANCE[name] = "PASS" if rep.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in ACCEPTANCE.items():
        terminalreporter.write_line(f"{verdict} {name}")
