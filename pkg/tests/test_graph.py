from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from homlab import fixtures
from homlab.errors import EvenCycle, InvalidDismantling, NotACycle
from homlab.graph import (
    Graph,
    all_squares,
    check_cycle,
    complete_graph,
    cycle_graph,
    find_dismantling_sequence,
    find_fold,
    format_edge_list,
    parse_edge_list,
    path_graph,
    square_counts,
    squares_through_edge,
    tensor_product,
    union_subproduct,
    validate_dismantling_sequence,
)

from strategies import graphs, to_nx


def brute_squares(G):
    out = set()
    for a, b, c, d in itertools.permutations(range(G.n), 4):
        if G.has_edge(a, b) and G.has_edge(b, c) and G.has_edge(c, d) and G.has_edge(d, a):
            out.add(frozenset([frozenset((a, b)), frozenset((b, c)), frozenset((c, d)), frozenset((d, a))]))
    return out


def test_basic_constructors():
    assert cycle_graph(5).num_edges == 5
    assert path_graph(4).num_edges == 3
    assert complete_graph(4).num_edges == 6
    assert cycle_graph(7).is_connected()
    assert not cycle_graph(7).is_bipartite()
    assert cycle_graph(6).is_bipartite()


@settings(max_examples=60, deadline=None)
@given(graphs(5), graphs(4))
def test_tensor_product_matches_networkx(G, H):
    P = tensor_product(G, H)
    ref = nx.tensor_product(to_nx(G), to_nx(H))
    mapping = {(g, h): g * H.n + h for g in range(G.n) for h in range(H.n)}
    ref = nx.relabel_nodes(ref, mapping)
    assert {tuple(sorted(e)) for e in ref.edges} == set(P.edges)


@settings(max_examples=100, deadline=None)
@given(graphs(7))
def test_square_enumeration_matches_brute_force(G):
    found = {frozenset(frozenset(e) for e in [(q[0], q[1]), (q[1], q[2]), (q[2], q[3]), (q[3], q[0])])
             for q in all_squares(G)}
    assert found == brute_squares(G)
    counts = square_counts(G)
    for e in G.edges:
        assert counts[e] == len(squares_through_edge(G, e))


@settings(max_examples=100, deadline=None)
@given(graphs(7))
def test_shortest_odd_cycle_against_networkx(G):
    C = G.shortest_odd_cycle()
    if nx.is_bipartite(to_nx(G)):
        assert C is None
        return
    assert len(C) % 2 == 1
    for i in range(len(C)):
        assert G.has_edge(C[i], C[(i + 1) % len(C)])
    # no shorter odd closed walk: odd girth via powers of the adjacency matrix
    A = G.adjacency_matrix()
    M = A.copy()
    k = 1
    while not M.diagonal().any():
        M = M @ A @ A
        k += 2
    assert len(C) == k


@settings(max_examples=60, deadline=None)
@given(graphs(7))
def test_girth_against_networkx(G):
    ref = nx.girth(to_nx(G))
    assert G.girth() == ref


def test_check_cycle_errors():
    G = cycle_graph(5)
    assert check_cycle(G, [0, 1, 2, 3, 4]) == (0, 1, 2, 3, 4)
    with pytest.raises(NotACycle):
        check_cycle(G, [0, 1, 3])
    with pytest.raises(EvenCycle):
        check_cycle(cycle_graph(4), [0, 1, 2, 3])


def test_union_subproduct_is_subgraph_of_product():
    G, H = cycle_graph(5), cycle_graph(3)
    U = union_subproduct(G, range(5), H, range(3))
    P = tensor_product(G, H)
    assert U.edges <= P.edges
    # both factors are cycles here, so the union is the whole product
    assert U.edges == P.edges
    G2 = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)])
    U2 = union_subproduct(G2, (0, 1, 2), H, (0, 1, 2))
    assert U2.edges == tensor_product(G2, H).edges  # H is the cycle itself
    U3 = union_subproduct(G2, (0, 1, 2), G2, (0, 1, 2))
    assert U3.edges < tensor_product(G2, G2).edges


def test_moser_dismantling():
    G = fixtures.moser()
    D = fixtures.dismantling("moser")
    assert len(D) == 2
    assert not all_squares(D.kernel)
    with pytest.raises(InvalidDismantling):
        validate_dismantling_sequence(G, [(G.vertex("0"), G.vertex("1"))])


def test_k4_not_dismantlable():
    assert find_dismantling_sequence(complete_graph(4)) is None


@settings(max_examples=100, deadline=None)
@given(graphs(6))
def test_found_dismantlings_validate(G):
    D = find_dismantling_sequence(G)
    if D is not None:
        assert not all_squares(D.kernel)
        assert D.kernel.num_edges == G.num_edges - len(D)
        validate_dismantling_sequence(G, D.removed)


def test_fold_on_path():
    v, u = find_fold(path_graph(3))
    assert path_graph(3).neighbours(v) <= path_graph(3).neighbours(u)
    assert find_fold(cycle_graph(5)) is None


@settings(max_examples=50, deadline=None)
@given(graphs(6))
def test_edge_list_roundtrip(G):
    G2 = parse_edge_list(format_edge_list(G, comment="roundtrip"))
    assert G2 == G


def test_edge_list_labels_and_errors():
    G = parse_edge_list("label 0 x\nlabel 2 z\n0 1 # edge\n")
    assert G.n == 3 and G.label(0) == "x" and G.vertex("z") == 2
    with pytest.raises(ValueError):
        parse_edge_list("0 1 2\n")


def test_fixture_properties():
    for name in fixtures.names():
        G = fixtures.load(name)
        fixtures.validate(name, G)
    kb = fixtures.k_b()
    assert all(kb.degree(v) == 4 for v in range(kb.n))


def test_corrupted_fixture_is_rejected():
    G = fixtures.k_b()
    bad = G.remove_edges([(G.vertex("1"), G.vertex("2"))])
    with pytest.raises(fixtures.FixtureError):
        fixtures.validate("k_b", bad)


def test_random_graph_isomorphic_relabel():
    rng = random.Random(3)
    G = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)])
    perm = list(range(6))
    rng.shuffle(perm)
    assert nx.is_isomorphic(to_nx(G), to_nx(G.relabel(perm)))
