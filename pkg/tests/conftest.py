import random

import pytest
from hypothesis import settings, strategies as st

from twinwidth.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, b in zip(pairs, bits) if b])


@st.composite
def graph_and_sequence(draw, min_n=1, max_n=7):
    g = draw(graphs(min_n, max_n))
    live = list(range(g.n))
    steps = []
    while len(live) > 1:
        a = draw(st.sampled_from(live))
        b = draw(st.sampled_from([x for x in live if x != a]))
        steps.append((a, b))
        live.remove(b)
    return g, steps


def random_graph(rng: random.Random, n_min=1, n_max=7) -> Graph:
    n = rng.randint(n_min, n_max)
    p = rng.random()
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_sequence(rng: random.Random, n: int):
    live = list(range(n))
    steps = []
    while len(live) > 1:
        a, b = rng.sample(live, 2)
        steps.append((a, b))
        live.remove(b)
    return steps


@pytest.fixture
def rng():
    return random.Random(20240611)


# -- acceptance report --------------------------------------------------------
# Tests marked ``@pytest.mark.criterion("id", "text")`` get one PASS/FAIL/SKIP
# line each in the terminal summary, in definition order.

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.skipped):
        status = "SKIP" if rep.skipped else ("PASS" if rep.passed else "FAIL")
        _CRITERIA.append((mark.args[0], status, mark.args[1]))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for cid, status, text in _CRITERIA:
        terminalreporter.write_line(f"criterion {cid:<4} {status:<4}  {text}")
