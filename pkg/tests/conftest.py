import random

import pytest

from pcnlab.graph import build


def er_graph(n, p, seed):
    """Plain Erdos-Renyi test graph, independent of the package generators."""
    rng = random.Random(seed)
    nodes = [str(i) for i in range(n)]
    edges = [
        (nodes[i], nodes[j], 1)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return build(nodes, edges)


@pytest.fixture
def triangle():
    return build("abc", [("a", "b", 1), ("b", "c", 1), ("a", "c", 1)])


@pytest.fixture
def path4():
    return build("abcd", [("a", "b", 1), ("b", "c", 1), ("c", "d", 1)])


@pytest.fixture
def kite():
    # K4 minus the c-d edge
    return build("abcd", [("a", "b", 1), ("a", "c", 1), ("a", "d", 1),
                          ("b", "c", 1), ("b", "d", 1)])


def star(n, cap=1):
    nodes = [str(i) for i in range(n)]
    return build(nodes, [(nodes[0], nodes[i], cap) for i in range(1, n)])
