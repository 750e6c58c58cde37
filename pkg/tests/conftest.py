import random

import pytest

from tuttekit.graph import WeightedMultigraph
from tuttekit.rational import Rat


def triangle(w=1):
    return WeightedMultigraph.from_edges(3, [(0, 1, w), (1, 2, w), (0, 2, w)])


def k4(w=1):
    edges = [(u, v, w) for u in range(4) for v in range(u + 1, 4)]
    return WeightedMultigraph.from_edges(4, edges)


def path(n, w=1):
    return WeightedMultigraph.from_edges(n, [(i, i + 1, w) for i in range(n - 1)])


def cycle(n, w=1):
    edges = [(i, (i + 1) % n, w) for i in range(n)]
    return WeightedMultigraph.from_edges(n, edges)


def random_rat(rng, span=6, nonzero=False):
    while True:
        num = rng.randint(-span, span)
        den = rng.randint(1, span)
        r = Rat(num, den)
        if not nonzero or r != 0:
            return r


def random_multigraph(rng, max_n=6, max_m=10, allow_loops=True):
    n = rng.randint(1, max_n)
    m = rng.randint(0, max_m)
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if not allow_loops and u == v and n > 1:
            v = (u + 1) % n
        if u == v and not allow_loops:
            continue
        edges.append((u, v, random_rat(rng)))
    return WeightedMultigraph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
