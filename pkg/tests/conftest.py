import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the oracles module

from bicmgraphs.graphs import Graph


def masks(*vertex_sets):
    out = []
    for vs in vertex_sets:
        m = 0
        for v in vs:
            m |= 1 << (v - 1)
        out.append(m)
    return out


@pytest.fixture
def triangle():
    return Graph.from_edges(3, [(1, 2), (1, 3), (2, 3)])


@pytest.fixture
def p4():
    return Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])


@pytest.fixture
def diamond_tail():
    """Triangle 123, vertex 4 joined to 2 and 3, pendant 5 on 4."""
    return Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)])


@pytest.fixture
def bent_path():
    """The path on 4 vertices wired as 3-1-2-4."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (2, 4)])


@pytest.fixture
def four_cycle():
    return Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


@pytest.fixture
def two_edges():
    return Graph.from_edges(4, [(1, 2), (3, 4)])
