import random

import pytest
from hypothesis import strategies as st

from dmds.graph import Graph, build_from_edges


@st.composite
def graphs(draw, min_n=0, max_n=12):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return build_from_edges(n, [])
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs), unique=True))
    return build_from_edges(n, chosen)


def with_pendants_and_triangles(g: Graph, rng: random.Random, extra: int) -> Graph:
    """Attach pendant vertices and degree-2 triangles so every reduction rule fires."""
    edges = list(g.edges())
    n = g.n
    for _ in range(extra):
        anchor = rng.randrange(n) if n else None
        if anchor is None or rng.random() < 0.15:
            n += 1  # isolated vertex
        elif rng.random() < 0.5:
            edges.append((anchor, n))
            n += 1
        else:
            edges += [(anchor, n), (anchor, n + 1), (n, n + 1)]
            n += 2
    return build_from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(12345)
