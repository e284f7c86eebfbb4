from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homlab import fixtures
from homlab.covers import UniversalSpace, unicyclic_cover, universal_cover
from homlab.errors import IndeterminateAtBoundary, ModeError, NotInEpsilon
from homlab.exponential import constant_table, exp_component
from homlab.graph import cycle_graph
from homlab.homsearch import Hom, find_retraction
from homlab.median import (
    ObstructionWitness,
    WeightedTreeView,
    cyclic_hom,
    median,
    median_of,
    monochromatic_part,
    psi,
    retract_unicyclic,
    tree_median,
    tuples_adjacent,
)
from homlab.properties import random_tree, random_walk
from homlab.walks import Walk

from strategies import to_nx


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_tree_median_minimizes_weighted_distance(seed):
    rng = random.Random(seed)
    n = rng.randrange(1, 12)
    T = random_tree(rng, n)
    w = [rng.randrange(0, 4) for _ in range(n)]
    if sum(w) % 2 == 0:
        w[0] += 1
    d = dict(nx.all_pairs_shortest_path_length(to_nx(T)))
    cost = [sum(w[v] * d[m][v] for v in range(n)) for m in range(n)]
    best = min(cost)
    assert [m for m in range(n) if cost[m] == best] == [tree_median(T, w)]


@pytest.mark.parametrize("name", ["c5", "bowtie", "moser", "k_a"])
@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_word_median_matches_materialized_tree(name, seed):
    rng = random.Random(seed)
    D = fixtures.dismantling(name)
    U = universal_cover(D, 0, 4)
    T = U.kernel_graph()
    k = 2 * rng.randrange(0, 4) + 1
    ids = [rng.randrange(T.n) for _ in range(k)]
    weights = [0] * T.n
    for i in ids:
        weights[i] += 1
    assert U.vertices[tree_median(T, weights)] == median_of([U.vertices[i] for i in ids])


def test_weighted_view_and_boundary():
    D = fixtures.dismantling("c5")
    U = universal_cover(D, 0, 3)
    view = WeightedTreeView(U, {(0, 1): 2, (0, 4): 1})
    assert median(view) == (0, 1)
    with pytest.raises(IndeterminateAtBoundary):
        median(WeightedTreeView(U, {(0, 1, 2, 3, 4): 1}))
    with pytest.raises(ValueError):
        WeightedTreeView(U, {(0,): 2})


def test_psi_on_square_free_host_is_the_median():
    D = fixtures.dismantling("c5")
    S = UniversalSpace(D, 0)
    x = [(0, 1), (0, 4), (0, 1)]
    assert psi(S, x) == (0, 1)
    # mixed colours: the odd colour class is kept
    y = [(0,), (0, 1), (0, 1, 2), (0, 4), (0, 1, 2, 3)]
    assert monochromatic_part(S, y) == ((0, 1), (0, 4), (0, 1, 2, 3))
    # the cover is a path here; the even entries sit at offsets 0, 2, 2
    assert psi(S, [(0,), (0, 1, 2), (0, 1, 2), (0, 4), (0, 1)]) == (0, 1, 2)


def test_psi_needs_universal_mode():
    M = fixtures.moser()
    D = fixtures.dismantling("moser")
    vs = [M.vertex(s) for s in "0 1 2 3 4 0".split()]
    Q = unicyclic_cover(D, Walk(M, vs), 1)
    with pytest.raises(ModeError):
        psi(Q, [Q.vertices[0]])


def test_k_a_tuples_have_no_common_neighbour():
    K, D = fixtures.k_a(), fixtures.dismantling("k_a")
    z = K.vertex("0")
    S = UniversalSpace(D, z)
    lab = K.vertex
    one, three, five = (z, lab("2"), lab("1")), (z, lab("4"), lab("3")), (z, lab("6"), lab("5"))
    nbrs = [set(w for _, w in S.neighbours(x)) for x in (one, three, five)]
    assert not (nbrs[0] & nbrs[1] & nbrs[2])
    y = [S.step(S.root_vertex, lab(c)) for c in "626464242"]
    assert median_of(y) == S.root_vertex
    assert tuples_adjacent(S, [S.root_vertex] * 9, y)


@pytest.mark.parametrize("name,n", [("c5", 3), ("bowtie", 3), ("moser", 3), ("c5", 5), ("k_a", 3), ("c7", 3)])
def test_cyclic_hom_is_a_retraction_onto_constants(name, n):
    K, D = fixtures.load(name), fixtures.dismantling(name)
    comp = exp_component(K, n, constant_table(0, n))
    h = cyclic_hom(K, D, n, comp)
    assert isinstance(h, Hom) and h.is_valid()
    for v in range(K.n):
        c = constant_table(v, n)
        if c in comp:
            assert h.mapping[comp.index[c]] == v


def test_k_b_median_construction_is_obstructed():
    K, D = fixtures.k_b(), fixtures.dismantling("k_b")
    comp = exp_component(K, 3, constant_table(0, 3))
    out = cyclic_hom(K, D, 3, comp)
    assert isinstance(out, ObstructionWitness)
    a, b = out.images
    assert not K.has_edge(a, b)
    assert comp.graph.has_edge(*out.edge)
    assert "not adjacent" in out.describe(K)


def test_non_trivial_component_is_rejected():
    C5 = cycle_graph(5)
    D = fixtures.dismantling("c5")
    comp = exp_component(C5, 5, (0, 1, 2, 3, 4))
    with pytest.raises(NotInEpsilon):
        cyclic_hom(C5, D, 5, comp)


@pytest.mark.parametrize("name,cycle,window", [
    ("c7", "0 1 2 3 4 5 6 0", 4),
    ("moser", "0 1 2 3 4 0", 4),
    ("moser", "0 1 2 3 4 0", 2),
    ("c5", "0 1 2 3 4 0", 3),
])
def test_unicyclic_retraction(name, cycle, window):
    K, D = fixtures.load(name), fixtures.dismantling(name)
    Q = unicyclic_cover(D, Walk(K, [K.vertex(s) for s in cycle.split()]), window)
    r = retract_unicyclic(Q)
    assert r.hom.is_valid()
    assert len(r.cycle) % 2 == 1
    assert all(r.hom.mapping[v] == v for v in r.cycle)
    # independent route: the solver also finds a retraction onto the same set
    assert find_retraction(Q.graph, r.cycle) is not None


def test_retraction_rejects_universal_covers():
    U = universal_cover(fixtures.dismantling("c5"), 0, 3)
    with pytest.raises(ModeError):
        retract_unicyclic(U)


@pytest.mark.parametrize("name", ["moser", "k_a"])
@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_psi_keeps_the_majority_colour(name, seed):
    rng = random.Random(seed)
    K, D = fixtures.load(name), fixtures.dismantling(name)
    S = UniversalSpace(D, 0)
    k = 2 * rng.randrange(0, 3) + 1
    par = rng.randrange(2)
    x = [random_walk(rng, K, 0, 2 * rng.randrange(0, 3) + par) for _ in range(k)]
    xs = [tuple(S.step(S.root_vertex, w.vertices[1]) if len(w) == 1 else _lift(S, w)) for w in x]
    ys = [rng.choice([w for _, w in S.neighbours(e)]) for e in xs]
    assert tuples_adjacent(S, xs, ys)
    a, b = psi(S, xs), psi(S, ys)
    assert S.colour(a) == S.colour(xs[0]) and S.colour(b) == S.colour(ys[0])


def _lift(S, W):
    out = S.root_vertex
    for v in W.vertices[1:]:
        out = S.step(out, v)
    return out
