import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wheelfree.graphs import Graph, from_edges


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    while True:
        g = random_graph(rng, n)
        if g.is_connected():
            return g


@pytest.fixture(scope="session")
def warm_small_enumeration():
    """Populate the representative cache for orders every suite shares."""
    from wheelfree.enumeration import GeneratorConfig, enumerate_graphs
    for n in range(1, 8):
        for _ in enumerate_graphs(GeneratorConfig(n, "all")):
            pass
    for n in range(1, 8):
        for _ in enumerate_graphs(GeneratorConfig(n, "wheel_free")):
            pass
