from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homlab import fixtures
from homlab.covers import (
    UniversalSpace,
    deck_transform,
    lift_walk,
    lift_word,
    unicyclic_cover,
    universal_cover,
    verify_covering_map,
)
from homlab.errors import OutOfRadius, RootMismatch
from homlab.graph import cycle_graph, path_graph
from homlab.homsearch import find_isomorphism
from homlab.properties import random_walk
from homlab.walks import Walk, normal_form

from strategies import to_nx


def non_backtracking_count(G, r, radius):
    """Number of non-backtracking walks of length <= radius from r."""
    total, level = 1, [(None, r)]
    for _ in range(radius):
        nxt = [(v, w) for p, v in level for w in sorted(G.neighbours(v)) if w != p]
        total += len(nxt)
        level = nxt
    return total


@pytest.mark.parametrize("name,radius", [("c5", 8), ("bowtie", 5), ("c7", 6)])
def test_square_free_cover_is_the_walk_tree(name, radius):
    G, D = fixtures.load(name), fixtures.dismantling(name)
    U = universal_cover(D, 0, radius)
    assert U.graph.n == non_backtracking_count(G, 0, radius)
    assert nx.is_tree(to_nx(U.graph))


def test_c5_universal_cover_is_a_path():
    U = universal_cover(fixtures.dismantling("c5"), 0, 8)
    assert (U.graph.n, U.graph.num_edges) == (17, 16)
    assert find_isomorphism(U.graph, path_graph(17)) is not None
    assert verify_covering_map(U).ok


def test_c5_triple_winding_quotient_is_c15():
    C5 = fixtures.load("c5")
    R = Walk(C5, tuple(range(5)) * 3 + (0,))
    Q = unicyclic_cover(fixtures.dismantling("c5"), R, 1)
    assert find_isomorphism(Q.graph, cycle_graph(15)) is not None
    assert Q.is_closed()
    assert verify_covering_map(Q).ok


def test_bowtie_interior_profile():
    G, D = fixtures.bowtie(), fixtures.dismantling("bowtie")
    x = G.vertex("x")
    U = universal_cover(D, x, 6)
    for i in range(U.graph.n):
        if U.interior[i]:
            assert U.graph.degree(i) == (4 if U.tau[i] == x else 2)


def test_moser_cover_root_neighbours():
    G, D = fixtures.moser(), fixtures.dismantling("moser")
    U = universal_cover(D, G.vertex("0"), 5)
    assert U.graph.n == 59
    nb = sorted(G.label(U.tau[j]) for j in U.graph.neighbours(U.root_index))
    assert nb == ["1", "4", "a", "b"]
    assert verify_covering_map(U).ok


@pytest.mark.parametrize("name", ["c5", "bowtie", "moser", "k_a", "k_b"])
def test_kernel_edges_form_a_tree(name):
    U = universal_cover(fixtures.dismantling(name), 0, 4)
    K = U.kernel_graph()
    assert K.num_edges == K.n - 1 and K.is_connected()
    assert U.graph.is_bipartite()


def test_unicyclic_kernel_has_one_cycle():
    G, D = fixtures.moser(), fixtures.dismantling("moser")
    vs = [G.vertex(s) for s in "0 1 2 3 4 0".split()]
    Q = unicyclic_cover(D, Walk(G, vs), 3)
    K = Q.kernel_graph()
    assert K.is_connected() and K.num_edges == K.n
    assert len(K.shortest_cycle()) == len(normal_form(D, Walk(G, vs)))


def test_k_b_quotient_closes_onto_k_b():
    G, D = fixtures.k_b(), fixtures.dismantling("k_b")
    R = Walk(G, [G.vertex(s) for s in "a b c d e a".split()])
    sizes = [unicyclic_cover(D, R, w).graph.n for w in range(4)]
    assert sizes[1:] == [10, 10, 10]
    Q = unicyclic_cover(D, R, 2)
    assert Q.is_closed()
    assert find_isomorphism(Q.graph, G) is not None
    assert verify_covering_map(Q).ok


def test_verification_catches_a_missing_edge():
    U = universal_cover(fixtures.dismantling("moser"), 0, 4)
    e = U.graph.edge_list()[0]
    broken = U.with_graph(U.graph.remove_edges([e]))
    rep = verify_covering_map(broken)
    assert not rep.ok and rep.witness() is not None


def test_lift_walk_errors():
    C5 = fixtures.load("c5")
    U = universal_cover(fixtures.dismantling("c5"), 0, 3)
    with pytest.raises(RootMismatch):
        lift_walk(U, U.root_index, Walk(C5, (1, 2)))
    with pytest.raises(OutOfRadius):
        lift_walk(U, U.root_index, Walk(C5, (0, 1, 2, 3, 4)))
    L = lift_walk(U, U.root_index, Walk(C5, (0, 1, 2, 1)))
    assert [U.tau[i] for i in L.vertices] == [0, 1, 2, 1]


@pytest.mark.parametrize("name", ["moser", "k_a", "k_b"])
@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_lift_endpoint_matches_normal_form(name, seed):
    rng = random.Random(seed)
    G, D = fixtures.load(name), fixtures.dismantling(name)
    S = UniversalSpace(D, 0)
    W = random_walk(rng, G, 0, rng.randrange(0, 9))
    assert lift_word(S, S.root_vertex, W)[-1] == normal_form(D, W).vertices


def test_universal_deck_transform_is_tau_preserving():
    C5 = fixtures.load("c5")
    U = universal_cover(fixtures.dismantling("c5"), 0, 8)
    A = Walk(C5, (0, 1, 2, 3, 4, 0))
    t = deck_transform(U, A)
    assert t
    for i, j in t.items():
        assert U.tau[i] == U.tau[j]
    for u, v in U.graph.edge_list():
        if u in t and v in t:
            assert U.graph.has_edge(t[u], t[v])
    assert t[U.root_index] == U.vertex_id((0, 1, 2, 3, 4, 0))


def test_unicyclic_deck_transform_rules():
    C5 = fixtures.load("c5")
    D = fixtures.dismantling("c5")
    R = Walk(C5, tuple(range(5)) * 3 + (0,))
    Q = unicyclic_cover(D, R, 1)
    t = deck_transform(Q, Walk(C5, (0, 1, 2, 3, 4, 0)))
    assert sorted(t.values()) == list(range(15))
    ident = deck_transform(Q, R)
    assert all(i == j for i, j in ident.items())
    M = fixtures.moser()
    Dm = fixtures.dismantling("moser")
    vs = [M.vertex(s) for s in "0 1 2 3 4 0".split()]
    Qm = unicyclic_cover(Dm, Walk(M, vs), 2)
    triangle = [M.vertex(s) for s in "0 a 1 0".split()]
    with pytest.raises(ValueError):
        deck_transform(Qm, Walk(M, triangle))


def test_text_and_dot_are_deterministic():
    D = fixtures.dismantling("moser")
    a = universal_cover(D, 0, 3)
    b = universal_cover(D, 0, 3)
    assert a.to_text() == b.to_text()
    assert a.to_dot() == b.to_dot()
    assert a.to_dot().startswith("graph cover {")


@pytest.mark.parametrize("name", ["c5", "bowtie", "moser", "k_a", "k_b"])
def test_interior_flags_cover_the_depth_rule(name):
    D = fixtures.dismantling(name)
    for radius in range(3, 7):
        U = universal_cover(D, 0, radius)
        for i, w in enumerate(U.vertices):
            if len(w) - 1 <= radius - 3:
                assert U.interior[i]
            if U.interior[i]:
                assert len(U.graph.neighbours(i)) == len(list(U.space.neighbours(w)))
