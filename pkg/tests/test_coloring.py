import random

import pytest
from hypothesis import given

from bullhorn.coloring import (
    Coloring,
    chi_via_structure,
    chromatic_number,
    clique_number,
    clique_numbers_by_subset,
    k_colorable,
)
from bullhorn.errors import NotInClassError
from bullhorn.graph import Graph, complete, cycle, empty, path, petersen, star
from bullhorn.patterns import PatternKind, find_induced, is_free, reference_graph

from conftest import P5_BULL, all_graphs_upto, flat, graphs
import oracles


def test_k_colorable_examples():
    assert k_colorable(cycle(5), 2) is None
    col = k_colorable(cycle(5), 3)
    assert col is not None and col.is_proper(cycle(5)) and col.k == 3
    col = k_colorable(petersen(), 3)
    assert col is not None and col.is_proper(petersen())
    assert k_colorable(Graph(0), 0) == Coloring((), 0)
    assert k_colorable(Graph(1), 0) is None


def test_chromatic_number_examples():
    for n in range(1, 8):
        assert chromatic_number(complete(n)).k == n
    assert chromatic_number(cycle(5)).k == 3
    assert chromatic_number(reference_graph(PatternKind.GEM)).k == 3
    assert chromatic_number(Graph(0)).k == 0
    assert chromatic_number(empty(4)).k == 1
    assert chromatic_number(petersen()).k == 3


def test_clique_number_examples():
    assert clique_number(complete(5)).omega == 5
    assert clique_number(cycle(5)).omega == 2
    res = clique_number(reference_graph(PatternKind.BULL))
    assert res.omega == 3 and res.witness == (1, 2, 4)
    assert clique_number(Graph(0)).omega == 0


def test_chi_via_structure_examples():
    for g in (path(4), star(3), cycle(4), Graph.from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)])):
        assert is_free(g, P5_BULL)[0]
        assert chi_via_structure(g).k == 2
    assert chi_via_structure(cycle(5)).k == 3
    with pytest.raises(NotInClassError) as info:
        chi_via_structure(path(5))
    assert info.value.witness.pattern is PatternKind.P5


def test_chi_via_structure_random_n9():
    rng = random.Random(7)
    checked = 0
    while checked < 40:
        n = 9
        g = Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < 0.6])
        if find_induced(g, PatternKind.P5) or find_induced(g, PatternKind.BULL):
            continue
        col = chi_via_structure(g)
        assert col.is_proper(g)
        assert col.k == chromatic_number(g).k
        checked += 1


def test_exact_colouring_matches_oracle(atlas7):
    for g in atlas7:
        col = chromatic_number(g)
        assert col.is_proper(g)
        assert col.k == oracles.chromatic_number(g)
        cl = clique_number(g)
        assert cl.omega == oracles.omega_by_subset(g)[-1]
        assert all(g.has_edge(u, v) for i, u in enumerate(cl.witness) for v in cl.witness[i + 1:])


def test_minimality_exhaustive_n8():
    for g in flat(all_graphs_upto(8)):
        col = chromatic_number(g)
        assert col.is_proper(g) and len(col.classes()) == col.k
        assert clique_number(g).omega <= col.k
        if col.k:
            assert k_colorable(g, col.k - 1) is None


def test_chi_via_structure_matches_oracle_small(atlas7):
    for g in atlas7:
        if is_free(g, P5_BULL)[0]:
            col = chi_via_structure(g)
            assert col.is_proper(g) and col.k == oracles.chromatic_number(g)


@given(graphs(max_n=11, p=0.5))
def test_colouring_properties_random(g):
    col = chromatic_number(g)
    assert col.is_proper(g)
    omega = clique_number(g).omega
    assert omega <= col.k
    assert k_colorable(g, col.k) is not None
    if col.k:
        assert k_colorable(g, col.k - 1) is None


@given(graphs(max_n=9))
def test_clique_table_matches_direct(g):
    table = clique_numbers_by_subset(g)
    assert table[-1] == clique_number(g).omega
    assert table == oracles.omega_by_subset(g)
