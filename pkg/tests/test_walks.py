from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homlab import fixtures
from homlab.errors import EmptyWord, NotAnArc, NotClosed, WrongHost
from homlab.graph import complete_graph, cycle_graph, tensor_product
from homlab.properties import diamond_move, random_closed_walk, random_walk
from homlab.walks import (
    Walk,
    arc_closed_walk,
    concat_reduce,
    conjugacy,
    cyclic_reduction,
    equivalent,
    normal_form,
    parse_walk,
    primitive_root,
    project_walk,
    reduce,
    reduce_vertices,
    rho_rewrite,
    tensor_walk,
    tensor_walk_dual,
)

NAMES = ["c5", "bowtie", "moser", "k_a", "k_b"]


def labels(G, text):
    return tuple(G.vertex(t) for t in text.split(","))


def test_reduce_examples():
    assert reduce_vertices((0, 1, 0)) == (0,)
    assert reduce_vertices((0, 1, 2, 1, 2, 3)) == (0, 1, 2, 3)
    assert concat_reduce((0, 1, 2), (2, 1, 0)) == (0,)
    assert concat_reduce((0, 1, 2), (2, 3)) == (0, 1, 2, 3)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=12))
def test_reduce_is_idempotent_and_reduced(vs):
    r = reduce_vertices(tuple(vs))
    assert reduce_vertices(r) == r
    assert all(r[i] != r[i + 2] for i in range(len(r) - 2))


def test_moser_rewrite_first_step_matches_drawing():
    G, D = fixtures.moser(), fixtures.dismantling("moser")
    W = Walk(G, labels(G, "0,a,2,3,b,4,0"))
    assert rho_rewrite(D, W, upto=1).vertices == labels(G, "0,a,0,1,2,3,b,4,0")
    # the second removal also replaces the arc 3-b
    assert rho_rewrite(D, W).vertices == labels(G, "0,a,0,1,2,3,4,0,b,4,0")
    assert normal_form(D, W).vertices == labels(G, "0,1,2,3,4,0,b,4,0")


def test_rewrite_lands_in_kernel():
    for name in NAMES:
        G, D = fixtures.load(name), fixtures.dismantling(name)
        rng = random.Random(name)
        for _ in range(20):
            W = random_walk(rng, G, rng.randrange(G.n), rng.randrange(0, 8))
            R = rho_rewrite(D, W)
            assert all(D.kernel.has_edge(a, b) for a, b in R.arcs)
            assert R.start == W.start and R.end == W.end


@pytest.mark.parametrize("name", NAMES)
@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_normal_form_invariant_under_square_moves(name, seed):
    rng = random.Random(seed)
    G, D = fixtures.load(name), fixtures.dismantling(name)
    W = random_walk(rng, G, rng.randrange(G.n), rng.randrange(1, 9))
    vs = W.vertices
    for _ in range(rng.randrange(1, 4)):
        vs = diamond_move(rng, G, vs)
    assert normal_form(D, Walk(G, vs)) == normal_form(D, W)


@pytest.mark.parametrize("name", NAMES)
@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_normal_form_is_a_homomorphism(name, seed):
    rng = random.Random(seed)
    G, D = fixtures.load(name), fixtures.dismantling(name)
    W1 = random_walk(rng, G, rng.randrange(G.n), rng.randrange(0, 7))
    W2 = random_walk(rng, G, W1.end, rng.randrange(0, 7))
    n1, n2 = normal_form(D, W1), normal_form(D, W2)
    assert normal_form(D, W1 + W2) == n1 * n2
    assert normal_form(D, W1.inverse()) == n1.inverse()
    assert Walk(D.kernel, n1.vertices).is_reduced()


def test_square_boundaries_are_trivial():
    for name in NAMES:
        G, D = fixtures.load(name), fixtures.dismantling(name)
        from homlab.graph import all_squares
        for q in all_squares(G):
            assert normal_form(D, Walk(G, q + (q[0],))).is_trivial()


def test_equivalent_and_wrong_host():
    C5 = cycle_graph(5)
    D = fixtures.dismantling("c5")
    assert equivalent(D, Walk(C5, (0, 1, 0, 4)), Walk(C5, (0, 4)))
    assert not equivalent(D, Walk(C5, (0, 1, 2, 3, 4, 0)), Walk(C5, (0,)))
    with pytest.raises(WrongHost):
        normal_form(D, Walk(cycle_graph(7), (0, 1)))


def test_cyclic_reduction_and_conjugacy():
    C5 = cycle_graph(5)
    D = fixtures.dismantling("c5")
    P, Z = cyclic_reduction((1, 0, 1, 2, 3, 4, 0, 1))
    assert P == (1, 0) and Z == (0, 1, 2, 3, 4, 0)
    A = Walk(C5, (0, 1, 2, 3, 4, 0))
    B = Walk(C5, (2, 3, 4, 0, 1, 2))
    w = conjugacy(D, A, B)
    assert w is not None
    lhs = normal_form(D, A)
    rhs = normal_form(D, Walk(C5, w.vertices) + B + Walk(C5, w.vertices).inverse())
    assert lhs == rhs
    assert conjugacy(D, A, A ** 2) is None
    assert conjugacy(D, A, A.inverse()) is None
    with pytest.raises(NotClosed):
        conjugacy(D, Walk(C5, (0, 1)), A)


@pytest.mark.parametrize("name", ["moser", "k_a", "k_b"])
@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_conjugacy_witness_is_valid(name, seed):
    rng = random.Random(seed)
    G, D = fixtures.load(name), fixtures.dismantling(name)
    C1 = random_closed_walk(rng, G, rng.randrange(G.n), rng.randrange(1, 7))
    P = random_walk(rng, G, C1.start, rng.randrange(0, 5))
    C2 = P.inverse() + C1 + P
    w = conjugacy(D, C1, C2)
    assert w is not None
    W = Walk(G, w.vertices)
    assert normal_form(D, C1) == normal_form(D, W + C2 + W.inverse())


def test_primitive_root():
    C5 = cycle_graph(5)
    D = fixtures.dismantling("c5")
    nf = normal_form(D, Walk(C5, (1,) + (0, 1, 2, 3, 4) * 2 + (0, 1)))
    root, e = primitive_root(nf)
    assert e == 2
    assert root.vertices == (1, 2, 3, 4, 0, 1)
    assert root * root == nf
    with pytest.raises(EmptyWord):
        primitive_root(normal_form(D, Walk(C5, (0,))))


def test_arc_closed_walk_layout():
    K3 = complete_graph(3)
    h, h2 = (0, 0, 0), (1, 2, 1)
    W = arc_closed_walk(K3, 3, h, h2)
    assert len(W) == 6 and W.is_closed()
    assert W.vertices == (0, 2, 0, 1, 0, 1, 0)
    # even positions come from the first table, odd from the second
    assert all(W.vertices[j] == (h if j % 2 == 0 else h2)[j % 3] for j in range(7))
    with pytest.raises(NotAnArc):
        arc_closed_walk(K3, 3, (0, 0, 0), (0, 0, 0))


def test_tensor_walk_projections():
    G, H = cycle_graph(5), cycle_graph(3)
    P = tensor_product(G, H)
    C = Walk(G, (0, 1, 2, 3, 4, 0))
    W = tensor_walk(C, (0, 1), H, host=P)
    assert project_walk(W, H.n, 0, G).vertices == (C + C).vertices
    assert project_walk(W, H.n, 1, H).vertices == (0, 1) * 5 + (0,)
    Dw = Walk(H, (0, 1, 2, 0))
    W2 = tensor_walk_dual((0, 1), G, Dw, host=P)
    assert project_walk(W2, H.n, 1, H).vertices == (Dw + Dw).vertices


def test_walk_text_roundtrip():
    G = fixtures.moser()
    W = Walk(G, labels(G, "0,a,2,3"))
    assert parse_walk(G, W.to_text()) == W
    assert reduce(Walk(G, labels(G, "0,1,0"))).vertices == (G.vertex("0"),)
