"""Shared instance builders and hypothesis strategies."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from stashpeel import Hypergraph


def mkgraph(n: int, edges, d: int = 2) -> Hypergraph:
    g = Hypergraph(d)
    g.add_vertices(n)
    for e in edges:
        g.add_edge(e)
    return g


def triangle() -> Hypergraph:
    return mkgraph(3, [(0, 1), (1, 2), (2, 0)])


def path(n: int) -> Hypergraph:
    return mkgraph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Hypergraph:
    return mkgraph(n, combinations(range(n), 2))


def two_triangles() -> Hypergraph:
    return mkgraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])


@st.composite
def hypergraphs(draw, d: int | None = None, max_vertices: int = 8, max_edges: int = 10):
    arity = d if d is not None else draw(st.sampled_from((2, 3)))
    n = draw(st.integers(min_value=arity, max_value=max(arity, max_vertices)))
    pool = list(combinations(range(n), arity))
    edges = draw(st.lists(st.sampled_from(pool), max_size=max_edges))
    return mkgraph(n, edges, arity)
