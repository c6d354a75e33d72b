import itertools

import pytest
from hypothesis import given

from bullhorn.errors import InvalidVertexSetError
from bullhorn.graph import (
    Graph,
    complement,
    complete,
    cycle,
    disjoint_union,
    empty,
    induced_subgraph,
    induced_subgraph_labeled,
    is_anticomplete_to,
    is_coconnected,
    is_complete_to,
    is_connected,
    path,
    relabel,
)
from bullhorn.patterns import PatternKind, reference_graph

from conftest import all_graphs_upto, flat, graphs
import oracles


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0))  # self-loop
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, (0b100, 0))  # out of range
    with pytest.raises(ValueError):
        Graph(-1)
    assert Graph(0).n == 0 and Graph(0).m == 0


def test_graph_is_hashable_value():
    a = Graph.from_edges(3, [(0, 1), (1, 2)])
    b = Graph.from_edges(3, [(2, 1), (1, 0)])
    assert a == b and hash(a) == hash(b)
    assert len({a, b, path(3)}) == 1


def test_complement_examples():
    assert complement(cycle(5)) == relabel(cycle(5), [0, 2, 4, 1, 3])
    assert oracles.to_nx(complement(path(5))).number_of_edges() == 6
    import networkx as nx

    assert nx.is_isomorphic(oracles.to_nx(complement(path(5))), oracles.to_nx(reference_graph(PatternKind.HOUSE)))
    assert complement(complete(3)) == empty(3)


def test_induced_subgraph_examples():
    c5 = cycle(5)
    for drop in range(5):
        sub = induced_subgraph(c5, [v for v in range(5) if v != drop])
        assert sorted(d for d in map(sub.degree, range(4))) == [1, 1, 2, 2]
    g = path(6)
    assert induced_subgraph(g, range(6)) == g
    bull = reference_graph(PatternKind.BULL)
    assert induced_subgraph(bull, [1, 2, 4]) == complete(3)


def test_induced_subgraph_labels_and_errors():
    g = cycle(6)
    sub, labels = induced_subgraph_labeled(g, [5, 0, 1])
    assert labels == (0, 1, 5)
    assert sub.edges() == [(0, 1), (0, 2)]
    with pytest.raises(InvalidVertexSetError):
        induced_subgraph(g, [0, 6])
    with pytest.raises(InvalidVertexSetError):
        induced_subgraph(g, [-1])


def test_connectivity_examples():
    assert (is_connected(cycle(5)), is_coconnected(cycle(5))) == (True, True)
    assert (is_connected(complete(3)), is_coconnected(complete(3))) == (True, False)
    two_k2 = disjoint_union(complete(2), complete(2))
    assert (is_connected(two_k2), is_coconnected(two_k2)) == (False, True)
    assert is_connected(Graph(0)) and is_connected(Graph(1))


def test_complete_anticomplete_examples():
    assert is_complete_to(complete(4), [0], [1, 2, 3])
    assert is_anticomplete_to(empty(3), [0], [1, 2])
    p4 = path(4)
    assert not is_complete_to(p4, [0], [2, 3])
    assert is_anticomplete_to(p4, [0], [2, 3])
    with pytest.raises(InvalidVertexSetError):
        is_complete_to(p4, [0, 1], [1, 2])


def test_exhaustive_core_invariants():
    for g in flat(all_graphs_upto(7)):
        assert complement(complement(g)) == g
        assert 2 * g.m == sum(g.degree(v) for v in range(g.n))
        assert is_connected(g) or is_coconnected(g)
        assert is_connected(g) == oracles.connected(g)


@given(graphs(max_n=14))
def test_complement_involution_random(g):
    assert complement(complement(g)) == g
    assert complement(g).m == g.n * (g.n - 1) // 2 - g.m


@given(graphs(max_n=10))
def test_induced_subgraph_matches_pair_filter(g):
    for size in range(g.n + 1):
        s = list(range(0, g.n, 2))[:size]
        sub = induced_subgraph(g, s)
        assert sub.n == len(s)
        expected = [(i, j) for i, j in itertools.combinations(range(len(s)), 2) if g.has_edge(s[i], s[j])]
        assert sub.edges() == expected
