"""Canonical labelling and exhaustive generation."""

import itertools
import random

import networkx as nx
from hypothesis import given, settings

from bullhorn.canon import automorphisms_brute, canonical_form, canonical_labeling, is_isomorphic
from bullhorn.generate import all_graphs, connected_only, generate
from bullhorn.graph import Graph, complete, cycle, petersen, relabel, wheel
from bullhorn.patterns import PatternKind

from conftest import BULL_HOUSE, P5_BULL, all_graphs_upto, connected_class, graph_and_perm, graphs
import oracles

# number of graphs on n vertices up to isomorphism (OEIS A000088), n = 1..8
ALL_COUNTS = [1, 2, 4, 11, 34, 156, 1044, 12346]
# connected graphs (OEIS A001349), n = 1..8
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853, 11117]


@given(graph_and_perm(max_n=10))
def test_canonical_form_is_relabelling_invariant(gp):
    g, perm = gp
    assert canonical_form(g) == canonical_form(relabel(g, perm))


@given(graphs(max_n=9))
def test_canonical_labeling_is_an_isomorphism(g):
    perm, canon = canonical_labeling(g)
    assert sorted(perm) == list(range(g.n))
    # perm[i] is the vertex placed at position i, so relabel by its inverse
    inverse = [0] * g.n
    for pos, v in enumerate(perm):
        inverse[v] = pos
    assert relabel(g, inverse) == canon


@settings(max_examples=60)
@given(graphs(min_n=1, max_n=8), graphs(min_n=1, max_n=8))
def test_isomorphism_agrees_with_networkx(a, b):
    assert is_isomorphic(a, b) == nx.is_isomorphic(oracles.to_nx(a), oracles.to_nx(b))


def test_symmetric_graphs():
    for g in (complete(10), petersen(), cycle(11), wheel(8), Graph(12)):
        for seed in range(3):
            perm = list(range(g.n))
            random.Random(seed).shuffle(perm)
            assert canonical_form(relabel(g, perm)) == canonical_form(g)


def test_automorphism_counts():
    assert len(automorphisms_brute(petersen())) == 120
    assert len(automorphisms_brute(cycle(5))) == 10
    assert len(automorphisms_brute(complete(4))) == 24


def test_brute_canonical_agreement_small(atlas7):
    # for n <= 5 compare with the minimum adjacency code over all permutations
    def brute(g):
        return min(relabel(g, p).adj for p in itertools.permutations(range(g.n)))

    small = [g for g in atlas7 if g.n <= 5]
    codes = {brute(g) for g in small}
    assert len(codes) == len(small)
    for g in small:
        for p in itertools.islice(itertools.permutations(range(g.n)), 0, None, 7):
            h = relabel(g, p)
            assert brute(h) == brute(g)
            assert canonical_form(h) == canonical_form(g)


def test_all_graph_counts():
    levels = all_graphs_upto(8)
    assert [len(levels[n]) for n in range(1, 9)] == ALL_COUNTS
    conn = connected_only(levels)
    assert [len(conn[n]) for n in range(1, 9)] == CONNECTED_COUNTS


def test_generation_matches_atlas(atlas7):
    ours = {canonical_form(g) for gs in all_graphs(7).values() for g in gs}
    theirs = {canonical_form(g) for g in atlas7}
    assert ours == theirs


def test_class_generation_matches_filtering(atlas7):
    for kinds in (P5_BULL, BULL_HOUSE):
        gen = connected_class(kinds, 9)
        for n in range(1, 8):
            expected = {
                canonical_form(g)
                for g in atlas7
                if g.n == n and oracles.connected(g)
                and all(oracles.induced_witness(g, k.value) is None for k in kinds)
            }
            assert set(gen[n]) == expected


def test_class_counts_frozen():
    # frozen from an earlier run of this generator, double-checked above for n <= 7
    expected = [1, 1, 2, 6, 19, 79, 341, 1704, 9085]
    for kinds in (P5_BULL, BULL_HOUSE):
        gen = connected_class(kinds, 9)
        assert [len(gen[n]) for n in range(1, 10)] == expected


def test_complement_forbidden_generation():
    # graphs whose complement is P5-free are exactly the house-free graphs
    a = generate(6, forbidden=[PatternKind.HOUSE], connected=False)
    b = generate(6, complement_forbidden=[PatternKind.P5], connected=False)
    assert a == b
