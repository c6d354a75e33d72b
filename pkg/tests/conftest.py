"""Shared strategies and cached exhaustive catalogues.

The catalogues are expensive (tens of seconds for the class enumerations at
n = 9), so each is computed once per session and shared between the
per-module tests and the acceptance run.
"""

from __future__ import annotations

import pathlib
import sys
from functools import lru_cache

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from bullhorn.critical import enumerate_critical  # noqa: E402
from bullhorn.generate import all_graphs, generate  # noqa: E402
from bullhorn.graph import Graph  # noqa: E402
from bullhorn.patterns import PatternKind  # noqa: E402

GOLDEN = pathlib.Path(__file__).parent / "golden"
P5_BULL = (PatternKind.P5, PatternKind.BULL)
BULL_HOUSE = (PatternKind.BULL, PatternKind.HOUSE)


@lru_cache(maxsize=None)
def all_graphs_upto(n_max: int) -> dict[int, list[Graph]]:
    return all_graphs(n_max)


@lru_cache(maxsize=None)
def connected_class(kinds: tuple[PatternKind, ...], n_max: int) -> dict[int, list[Graph]]:
    return generate(n_max, forbidden=kinds, connected=True)


@lru_cache(maxsize=None)
def census(k: int, n_max: int, kinds: tuple[PatternKind, ...] = P5_BULL):
    return enumerate_critical(kinds, k, n_max)


def flat(levels: dict[int, list[Graph]], n_max: int | None = None) -> list[Graph]:
    return [g for n, gs in sorted(levels.items()) if n_max is None or n <= n_max for g in gs]


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9, p: float | None = None) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    if p is None:
        mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
        chosen = [e for i, e in enumerate(pairs) if mask >> i & 1]
    else:
        chosen = [e for e in pairs if draw(st.floats(0, 1)) < p]
    return Graph.from_edges(n, chosen)


@st.composite
def graph_and_perm(draw, min_n: int = 1, max_n: int = 9):
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)


@pytest.fixture(scope="session")
def atlas7():
    import oracles

    return oracles.atlas(7)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
