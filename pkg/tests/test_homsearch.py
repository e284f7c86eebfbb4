from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homlab import fixtures
from homlab.errors import InvalidHom, SearchTimeout
from homlab.graph import Graph, complete_graph, cycle_graph, path_graph
from homlab.homsearch import (
    Hom,
    find_hom,
    find_isomorphism,
    find_retraction,
    is_core,
    is_hom_equivalent,
    iter_homs,
    parse_hom,
)

from strategies import graphs, to_nx


def brute_homs(G, K):
    out = []
    for m in itertools.product(range(K.n), repeat=G.n):
        if all(K.has_edge(m[u], m[v]) for u, v in G.edges):
            out.append(m)
    return out


@settings(max_examples=100, deadline=None)
@given(graphs(5), graphs(4))
def test_find_hom_agrees_with_brute_force(G, K):
    ref = brute_homs(G, K)
    f = find_hom(G, K)
    assert (f is not None) == bool(ref)
    if f is not None:
        assert f.is_valid()
    assert sorted(iter_homs(G, K)) == sorted(ref)


@settings(max_examples=100, deadline=None)
@given(graphs(6), st.randoms(use_true_random=False))
def test_isomorphism_agrees_with_networkx(G, rng):
    perm = list(range(G.n))
    rng.shuffle(perm)
    H = G.relabel(perm)
    f = find_isomorphism(G, H)
    assert f is not None and f.is_valid()
    assert len(set(f.mapping)) == G.n


@settings(max_examples=100, deadline=None)
@given(graphs(6), graphs(6))
def test_isomorphism_negative_against_networkx(G, H):
    assert (find_isomorphism(G, H) is not None) == nx.is_isomorphic(to_nx(G), to_nx(H))


def test_known_homs():
    assert find_hom(cycle_graph(5), complete_graph(3)) is not None
    assert find_hom(complete_graph(3), cycle_graph(5)) is None
    assert find_hom(cycle_graph(7), cycle_graph(5)) is not None
    assert find_hom(cycle_graph(5), cycle_graph(7)) is None
    assert is_hom_equivalent(path_graph(4), complete_graph(2))


def test_circular_clique_chromatic_facts():
    K72 = fixtures.load("k72")
    assert find_hom(K72, complete_graph(4)) is not None
    assert find_hom(K72, complete_graph(3)) is None
    assert find_hom(cycle_graph(7), K72) is not None


def test_cores():
    assert is_core(cycle_graph(5))
    assert not is_core(path_graph(3))
    assert is_core(fixtures.k_a())


def test_retraction_fixes_set():
    G = Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    r = find_retraction(G, [0, 1, 2])
    assert r is not None
    assert all(r.mapping[v] == v for v in (0, 1, 2))
    assert find_retraction(cycle_graph(5), [0, 1]) is None


def test_hom_text_roundtrip_and_validation():
    G, K = cycle_graph(5), complete_graph(3)
    f = find_hom(G, K)
    assert parse_hom(f.to_text(), G, K) == f
    with pytest.raises(InvalidHom):
        Hom(G, K, (0, 0, 0, 0, 0)).check()
    with pytest.raises(InvalidHom):
        Hom(G, K, (0, 1))


def test_deadline_expires():
    with pytest.raises(SearchTimeout):
        find_hom(complete_graph(8), complete_graph(7), deadline=0.0)
