from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from starconvex.graph import WeightedGraph

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def connected_graphs(
    draw: st.DrawFn,
    min_size: int = 1,
    max_size: int = 7,
    weights: st.SearchStrategy[int] = st.integers(0, 3),
    extra_edges: bool = True,
) -> WeightedGraph:
    """Connected graphs: a random spanning tree plus optional extra edges."""
    n = draw(st.integers(min_size, max_size))
    ids = [f"n{i}" for i in range(n)]
    edges = {(ids[draw(st.integers(0, i - 1))], ids[i]) for i in range(1, n)}
    if extra_edges and n > 2:
        pairs = [(a, b) for i, a in enumerate(ids) for b in ids[i + 1 :]]
        edges |= set(draw(st.lists(st.sampled_from(pairs), max_size=n)))
    edges = {tuple(sorted(e)) for e in edges}
    return WeightedGraph({v: draw(weights) for v in ids}, sorted(edges))


def trees(max_size: int = 8, weights: st.SearchStrategy[int] = st.integers(0, 3)):
    return connected_graphs(min_size=2, max_size=max_size, weights=weights, extra_edges=False)


def frac(x: int | str) -> Fraction:
    return Fraction(x)


# -- acceptance summary ---------------------------------------------------------------

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    failed = report.failed
    if report.when == "call" or failed:
        prev = _ACCEPTANCE.get(number, (title, "PASS"))[1]
        _ACCEPTANCE[number] = (title, "FAIL" if failed or prev == "FAIL" else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, status = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
