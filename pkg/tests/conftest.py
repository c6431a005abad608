import random

import pytest

from hyperramsey.config import Caps, set_caps
from hyperramsey.hypergraph import Hypergraph


@pytest.fixture(autouse=True)
def default_caps():
    set_caps(**vars(Caps()))
    yield
    set_caps(**vars(Caps()))


def random_hypergraph(rng: random.Random, k: int, max_vertices: int, max_edges: int) -> Hypergraph:
    n = rng.randint(k, max_vertices)
    edges = {tuple(sorted(rng.sample(range(n), k))) for _ in range(rng.randint(0, max_edges))}
    return Hypergraph.from_edges(k, edges, n)
