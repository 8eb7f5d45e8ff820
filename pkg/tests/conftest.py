from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings

from wiener_colorings.coloring import make_coloring
from wiener_colorings.graph import build_cycle, build_path

settings.register_profile(
    "repo",
    deadline=None,
    max_examples=80,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


def naive_w(dist, colors) -> int:
    """Independent double-loop Wiener index of a color array."""
    n = len(colors)
    return sum(int(dist[u][v]) for u, v in combinations(range(n), 2) if colors[u] == colors[v])


def one_based(n: int, classes: dict[int, set[int]]) -> tuple[int, ...]:
    """Color array from 1-based vertex classes as drawn in figures."""
    colors = [0] * n
    for c, vs in classes.items():
        for v in vs:
            colors[v - 1] = c
    assert 0 not in colors
    return tuple(colors)


# red=1, yellow=2, blue=3
FIG2A = one_based(14, {1: {1, 3, 5, 8, 12, 14}, 2: {2, 4, 6, 9, 11, 13}, 3: {7, 10}})
FIG2B_DRAWN = one_based(14, {1: {1, 3, 6, 9, 12, 14}, 2: {2, 4, 7, 10, 13}, 3: {5, 8, 11}})
# vertices 4 and 5 exchanged: the variant whose L/R counts match the worked text
FIG2B_TEXT = one_based(14, {1: {1, 3, 6, 9, 12, 14}, 2: {2, 5, 7, 10, 13}, 3: {4, 8, 11}})


@pytest.fixture
def fig2a():
    return make_coloring(build_path(14), FIG2A)


@pytest.fixture
def fig2b():
    return make_coloring(build_path(14), FIG2B_TEXT)


@pytest.fixture
def fig2b_drawn():
    return make_coloring(build_path(14), FIG2B_DRAWN)


@pytest.fixture
def c6():
    return build_cycle(6)


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test still asserts on the outcome."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])

    def record(number: int, what: str, ok: bool, elapsed: float | None = None) -> bool:
        timing = "" if elapsed is None else f" ({elapsed:.2f} s)"
        lines.append((number, f"{'PASS' if ok else 'FAIL'} criterion {number}: {what}{timing}"))
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
