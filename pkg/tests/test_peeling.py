import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stashpeel import (
    Hypergraph,
    NotFoundError,
    ParameterError,
    core_subgraph,
    is_k_peelable,
    k_core,
    k_core_after,
    verify_trace,
)

from helpers import complete_graph, hypergraphs, mkgraph, path, triangle, two_triangles
from oracles import core_by_enumeration


def test_path_has_empty_2_core():
    trace = k_core(path(3), 2)
    assert trace.core_empty
    assert len(trace.peeled_vertices) == 3
    assert trace.peeled_edges == {0, 1}


def test_triangle_2_core_is_everything():
    trace = k_core(triangle(), 2)
    assert trace.core_vertices == {0, 1, 2}
    assert trace.core_edges == {0, 1, 2}
    assert trace.peeled_vertices == ()


def test_k4_cores_match_enumeration_oracle():
    g = complete_graph(4)
    for k in (3, 4):
        want_v, want_e = core_by_enumeration(g, k)
        trace = k_core(g, k)
        assert trace.core_vertices == want_v
        assert trace.core_edges == want_e
    assert not k_core(g, 3).core_empty
    assert k_core(g, 4).core_empty


def test_forest_is_2_peelable():
    assert is_k_peelable(path(5), 2)


def test_triangle_not_2_peelable():
    assert not is_k_peelable(triangle(), 2)


def test_single_3_uniform_edge_is_2_peelable():
    assert is_k_peelable(mkgraph(3, [(0, 1, 2)], d=3), 2)


def test_zero_vertex_hypergraph_is_peelable_for_every_k():
    g = Hypergraph(2)
    for k in (1, 2, 5):
        trace = k_core(g, k)
        assert trace.core_empty and not trace.peeled_vertices


def test_degree_zero_vertices_are_peeled():
    g = mkgraph(4, [(0, 1), (1, 2), (2, 0)])
    trace = k_core(g, 2)
    assert 3 in trace.peeled_vertices
    assert trace.core_vertices == {0, 1, 2}


def test_k_below_one_rejected():
    with pytest.raises(ParameterError):
        k_core(triangle(), 0)


def test_k_core_after_stash_edge_on_triangle():
    assert k_core_after(triangle(), 2, stash_edges=[0]).core_empty


def test_k_core_after_stash_vertex_on_triangle():
    assert k_core_after(triangle(), 2, stash_vertices=[1]).core_empty


def test_k_core_after_disjoint_triangles_matches_oracle():
    g = two_triangles()
    trace = k_core_after(g, 2, stash_edges=[0])
    pruned = g.copy()
    pruned.remove_edge(0)
    want_v, want_e = core_by_enumeration(pruned, 2)
    assert trace.core_vertices == want_v == {3, 4, 5}
    assert trace.core_edges == want_e


def test_k_core_after_does_not_mutate():
    g = triangle()
    k_core_after(g, 2, stash_vertices=[0], stash_edges=[1])
    assert g == triangle()
    g.validate()


def test_k_core_after_unknown_ids():
    with pytest.raises(NotFoundError):
        k_core_after(triangle(), 2, stash_vertices=[9])
    with pytest.raises(NotFoundError):
        k_core_after(triangle(), 2, stash_edges=[9])


def test_trace_replay_and_core_subgraph():
    g = mkgraph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    trace = k_core(g, 2)
    assert verify_trace(g, trace)
    core = core_subgraph(g, trace)
    assert core.vertices == trace.core_vertices
    assert set(core.edges) == trace.core_edges


@settings(max_examples=80, deadline=None)
@given(hypergraphs(max_vertices=7, max_edges=9), st.sampled_from((1, 2, 3)))
def test_core_matches_enumeration_oracle(g, k):
    want_v, want_e = core_by_enumeration(g, k)
    trace = k_core(g, k)
    assert trace.core_vertices == want_v
    assert trace.core_edges == want_e
    assert verify_trace(g, trace)


@settings(max_examples=40, deadline=None)
@given(hypergraphs(), st.sampled_from((2, 3)), st.lists(st.integers(0, 2**16), max_size=6))
def test_order_independence_under_random_worklists(g, k, seeds):
    base = k_core(g, k)
    for seed in seeds:
        other = k_core(g, k, order_seed=seed)
        assert other.core_vertices == base.core_vertices
        assert other.core_edges == base.core_edges
        assert verify_trace(g, other)


@settings(max_examples=50, deadline=None)
@given(hypergraphs(), st.sampled_from((2, 3)))
def test_idempotence_and_threshold_monotonicity(g, k):
    trace = k_core(g, k)
    core = core_subgraph(g, trace)
    again = k_core(core, k)
    assert again.core_vertices == trace.core_vertices
    assert again.core_edges == trace.core_edges
    higher = k_core(g, k + 1)
    assert higher.core_vertices <= trace.core_vertices
    assert higher.core_edges <= trace.core_edges


@settings(max_examples=50, deadline=None)
@given(hypergraphs(max_edges=8), st.sampled_from((2, 3)))
def test_removal_monotonicity(g, k):
    base = k_core(g, k)
    for e in sorted(g.edges):
        smaller = k_core_after(g, k, stash_edges=[e])
        assert smaller.core_vertices <= base.core_vertices
        assert smaller.core_edges <= base.core_edges and e not in smaller.core_edges
    for v in sorted(g.vertices):
        smaller = k_core_after(g, k, stash_vertices=[v])
        assert smaller.core_vertices <= base.core_vertices and v not in smaller.core_vertices
