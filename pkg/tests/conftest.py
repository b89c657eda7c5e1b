"""Shared helpers: random connected graphs for oracle and metric tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from flowergraphs import Graph, graph_from_edge_list


def random_connected_graph(rng: random.Random, max_vertices: int = 12) -> Graph:
    """Random connected simple graph: a spanning tree plus a few extra edges."""
    n = rng.randint(2, max_vertices)
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for idx in range(1, n):
        parent = order[rng.randrange(idx)]
        edges.add(tuple(sorted((parent, order[idx]))))
    extra = rng.randint(0, n)
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add(tuple(sorted((u, v))))
    return graph_from_edge_list(sorted(edges))


@st.composite
def connected_graphs(draw, max_vertices: int = 10) -> Graph:
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    edges = set()
    for v in range(1, n):
        parent = draw(st.integers(min_value=0, max_value=v - 1))
        edges.add((parent, v))
    extras = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
            max_size=n,
        )
    )
    for u, v in extras:
        if u != v:
            edges.add(tuple(sorted((u, v))))
    return graph_from_edge_list(sorted(edges))
