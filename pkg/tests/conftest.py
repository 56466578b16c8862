import random

import networkx as nx
import pytest

from fatcolor.families import random_graph
from fatcolor.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def record(criterion: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_LINES.append(f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def _atlas(connected: bool):
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() and nx.is_connected(h) == connected:
            out.append(Graph.from_edge_list(h.number_of_nodes(), list(h.edges())))
    return out


def random_eight(count=50):
    out = []
    for seed in range(count):
        p = random.Random(seed).uniform(0.2, 0.8)
        out.append(random_graph(8, p, seed))
    return out


@pytest.fixture(scope="session")
def connected_atlas():
    """All connected graphs on 1..7 vertices up to isomorphism (996 graphs)."""
    return _atlas(True)


@pytest.fixture(scope="session")
def disconnected_atlas():
    return _atlas(False)


@pytest.fixture(scope="session")
def corpus(connected_atlas):
    return connected_atlas + random_eight()


def cycle(n):
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, [[w for w in range(n) if w != v] for v in range(n)])
