"""Shared graph enumeration helpers and hypothesis strategies."""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from ktdom import Graph


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    """The labeled graph on n vertices whose edge set is the mask over
    lexicographically ordered vertex pairs."""
    pairs = vertex_pairs(n)
    return Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def all_graphs(n: int):
    """Every labeled graph on n vertices, in edge-mask order."""
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_mask(n, mask)


def sweep(max_n: int = 5):
    """Every labeled graph with 1 <= n <= max_n.  1099 graphs at max_n=5."""
    for n in range(1, max_n + 1):
        yield from all_graphs(n)


def random_graph(rng: random.Random, min_n: int = 1, max_n: int = 8) -> Graph:
    n = rng.randint(min_n, max_n)
    m = n * (n - 1) // 2
    return graph_from_mask(n, rng.getrandbits(m) if m else 0)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << m) - 1))
    return graph_from_mask(n, mask)
