import pytest
from hypothesis import given, strategies as st

from coeven.errors import InvalidVertexError, NotAnEdgeError
from coeven.graph import Graph
from coeven.transforms import contract_edge, contract_vertex, remove_edge, remove_vertex

from conftest import C4, K2, K3, K4, P3, P4, STAR3, TWO_K1, graphs


def test_remove_vertex_examples():
    assert remove_vertex(C4, 3).graph == P3
    assert remove_vertex(K4, 0).graph == K3
    assert remove_vertex(STAR3, 0).graph == Graph.empty(3)
    assert remove_vertex(C4, 1).mapping == (0, None, 1, 2)


def test_remove_edge_examples():
    assert remove_edge(C4, (0, 1)).graph == P4
    assert remove_edge(K3, (1, 0)).graph == Graph.from_edges(3, [(0, 2), (1, 2)])
    assert remove_edge(K2, (0, 1)).graph == TWO_K1
    with pytest.raises(NotAnEdgeError):
        remove_edge(C4, (0, 2))


def test_contract_vertex_examples():
    assert contract_vertex(P3, 1).graph == K2
    assert contract_vertex(C4, 0).graph == K3
    assert contract_vertex(K4, 0).graph == K3
    with pytest.raises(InvalidVertexError):
        contract_vertex(C4, 7)


def test_contract_edge_examples():
    assert contract_edge(C4, (0, 1)).graph == K3
    assert contract_edge(K3, (0, 1)).graph == K2
    res = contract_edge(P3, (0, 1))
    assert res.graph == K2
    assert res.merged_into == 0 and res.mapping == (0, 0, 1)


def test_inputs_untouched():
    before = (C4.n, C4.adj)
    for fn, x in ((remove_vertex, 0), (contract_vertex, 0), (remove_edge, (0, 1)), (contract_edge, (0, 1))):
        fn(C4, x)
    assert (C4.n, C4.adj) == before


def _survivors(res, g):
    return [v for v in range(g.n) if res.mapping[v] is not None]


@given(graphs(min_n=1), st.data())
def test_remove_vertex_counts(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    res = remove_vertex(g, v)
    assert res.graph.n == g.n - 1
    assert res.graph.num_edges() == g.num_edges() - g.degree(v)
    assert sorted(m for m in res.mapping if m is not None) == list(range(g.n - 1))
    for a in _survivors(res, g):
        for b in _survivors(res, g):
            if a != b:
                assert g.has_edge(a, b) == res.graph.has_edge(res.mapping[a], res.mapping[b])


@given(graphs(min_n=2), st.data())
def test_remove_edge_counts(g, data):
    if not g.edges():
        return
    u, v = data.draw(st.sampled_from(g.edges()))
    h = remove_edge(g, (u, v)).graph
    assert h.num_edges() == g.num_edges() - 1
    for x in range(g.n):
        assert h.degree(x) == g.degree(x) - (x in (u, v))


@given(graphs(min_n=1), st.data())
def test_contract_vertex_degrees(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    res = contract_vertex(g, v)
    nbrs = g.neighborhood(v)
    for x in range(g.n):
        if x == v:
            continue
        if x not in nbrs:
            assert res.graph.degree(res.mapping[x]) == g.degree(x)
    for a in nbrs:
        for b in nbrs:
            if a != b:
                assert res.graph.has_edge(res.mapping[a], res.mapping[b])


@given(graphs(min_n=2), st.data())
def test_contract_edge_counts(g, data):
    if not g.edges():
        return
    u, v = data.draw(st.sampled_from(g.edges()))
    res = contract_edge(g, (u, v))
    common = g.neighborhood(u) & g.neighborhood(v)
    h = res.graph
    assert h.n == g.n - 1
    assert h.num_edges() == g.num_edges() - 1 - len(common)
    assert res.mapping[u] == res.mapping[v] == res.merged_into == min(u, v)
    w = res.merged_into
    expected = {res.mapping[x] for x in (g.neighborhood(u) | g.neighborhood(v)) - {u, v}}
    assert h.neighborhood(w) == expected
    union = g.neighborhood(u) | g.neighborhood(v)
    for x in range(g.n):
        if x in (u, v):
            continue
        if x not in union:
            assert h.degree(res.mapping[x]) == g.degree(x)
        elif x in common:
            assert h.degree(res.mapping[x]) == g.degree(x) - 1
