import pytest
from hypothesis import settings
from hypothesis import strategies as st

from qpart.diagram import Diagram, vertices

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_acceptance = {}


@st.composite
def diagrams(draw, k=None, kmin=1, kmax=4):
    """A uniformish random diagram built from a restricted growth string."""
    if k is None:
        k = draw(st.integers(kmin, kmax))
    vs = vertices(k)
    labels = []
    top = -1
    for _ in vs:
        a = draw(st.integers(0, top + 1))
        labels.append(a)
        top = max(top, a)
    blocks = {}
    for v, a in zip(vs, labels):
        blocks.setdefault(a, []).append(v)
    return Diagram(k, blocks.values())


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None and rep.when == "call":
        n, title = mark.args
        prev = _acceptance.get(n, (title, True))
        _acceptance[n] = (title, prev[1] and rep.passed)
    elif mark is not None and rep.when == "setup" and rep.failed:
        n, title = mark.args
        _acceptance[n] = (title, False)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_acceptance):
        title, ok = _acceptance[n]
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}")
