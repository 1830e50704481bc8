import random
from itertools import combinations

import pytest

from euleredit import Digraph, Graph


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> Graph:
    edges = frozenset(e for e in combinations(range(n), 2) if rng.random() < density)
    return Graph(n, edges)


def random_digraph(rng: random.Random, n: int, density: float = 0.5) -> Digraph:
    arcs = frozenset(
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < density
    )
    return Digraph(n, arcs)


def all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def all_digraphs(n: int):
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for mask in range(1 << len(arcs)):
        yield Digraph(n, frozenset(a for i, a in enumerate(arcs) if mask >> i & 1))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xE01E)
