"""Randomized property checks shared by the test suite and ``verify-paper``.

Each ``check_*`` function takes a ``random.Random`` and returns ``None`` on
success or a short failure description.  ``run_property`` repeats one of
them over a fixed seed range.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from . import fixtures
from .covers import UniversalSpace, lift_word, tree_distance, universal_cover
from .exponential import eps_membership, exp_component, exp_neighbours
from .graph import Graph, all_squares
from .median import median_of, psi, tree_median
from .walks import Walk, concat_reduce, normal_form

__all__ = [
    "random_tree",
    "random_walk",
    "random_closed_walk",
    "diamond_move",
    "check_median_unique",
    "check_median_contraction",
    "check_psi_order_invariance",
    "check_psi_deck_covariance",
    "check_lift_unique",
    "check_lift_endpoint_stable",
    "check_cover_walks_trivial",
    "check_cover_bipartite",
    "check_eps_closure",
    "PROPERTIES",
    "run_property",
]


# ---------------------------------------------------------------------------
# generators

def random_tree(rng, n):
    es = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph(n, es)


def random_walk(rng, G, start, length):
    vs = [start]
    for _ in range(length):
        vs.append(rng.choice(sorted(G.neighbours(vs[-1]))))
    return Walk(G, vs)


def random_closed_walk(rng, G, start, length):
    W = random_walk(rng, G, start, length)
    back = G.shortest_path(W.end, start)
    return Walk(G, W.vertices + tuple(back[1:]))


def diamond_move(rng, G, vs, squares=None):
    """Apply one random move that keeps the walk class: insert a backtrack,
    insert a square boundary, or swap two arcs of a square for the other two."""
    vs = list(vs)
    if squares is None:
        squares = all_squares(G)
    i = rng.randrange(len(vs))
    kind = rng.randrange(3)
    if kind == 1:
        here = [q for q in squares if vs[i] in q]
        if here:
            q = list(rng.choice(here))
            j = q.index(vs[i])
            q = q[j:] + q[:j]
            if rng.random() < 0.5:
                q = [q[0]] + q[1:][::-1]
            vs[i + 1:i + 1] = q[1:] + [q[0]]
            return tuple(vs)
    if kind == 2 and i + 2 < len(vs):
        a, c = vs[i], vs[i + 2]
        alts = sorted(y for y in G.neighbours(a) & G.neighbours(c) if y != vs[i + 1] and a != c)
        if alts:
            vs[i + 1] = rng.choice(alts)
            return tuple(vs)
    w = rng.choice(sorted(G.neighbours(vs[i])))
    vs[i + 1:i + 1] = [w, vs[i]]
    return tuple(vs)


def _fixture(rng, names):
    name = rng.choice(names)
    return name, fixtures.load(name), fixtures.dismantling(name)


def _tuple(rng, space, G, size, parity):
    out = []
    for _ in range(size):
        L = 2 * rng.randrange(0, 5) + parity
        out.append(lift_word(space, space.root_vertex, random_walk(rng, G, space.root, L))[-1])
    return out


# ---------------------------------------------------------------------------
# medians and the polymorphism

def check_median_unique(rng):
    """Exactly one vertex of a weighted tree has no branch above half the weight."""
    n = rng.randrange(1, 12)
    T = random_tree(rng, n)
    w = [rng.randrange(0, 4) for _ in range(n)]
    if sum(w) % 2 == 0:
        w[rng.randrange(n)] += 1
    half = sum(w) // 2
    good = []
    for m in range(n):
        heavy = False
        for s in T.neighbours(m):
            seen, stack, acc = {m, s}, [s], 0
            while stack:
                u = stack.pop()
                acc += w[u]
                for x in T.neighbours(u):
                    if x not in seen:
                        seen.add(x)
                        stack.append(x)
            heavy = heavy or acc > half
        if not heavy:
            good.append(m)
    if good != [tree_median(T, w)]:
        return f"candidates {good}, tree_median {tree_median(T, w)}"
    return None


def check_median_contraction(rng):
    """Coordinatewise adjacent tuples have equal or adjacent medians."""
    name, G, D = _fixture(rng, ["c5", "bowtie", "c7"])
    space = UniversalSpace(D, rng.randrange(G.n))
    size = 2 * rng.randrange(0, 4) + 1
    x = _tuple(rng, space, G, size, rng.randrange(2))
    y = [rng.choice(space.tree_neighbours(e)) for e in x]
    d = tree_distance(median_of(x), median_of(y))
    if d > 1:
        return f"{name}: medians at distance {d}"
    return None


def check_psi_order_invariance(rng):
    name, G, D = _fixture(rng, ["c5", "bowtie", "moser", "k_a"])
    space = UniversalSpace(D, rng.randrange(G.n))
    x = _tuple(rng, space, G, 2 * rng.randrange(0, 4) + 1, rng.randrange(2))
    y = list(x)
    rng.shuffle(y)
    if psi(space, x) != psi(space, y):
        return f"{name}: psi depends on the order of {x}"
    return None


def check_psi_deck_covariance(rng):
    """``psi`` commutes with left multiplication by a closed walk at the root."""
    name, G, D = _fixture(rng, ["c5", "bowtie", "moser", "k_a"])
    r = rng.randrange(G.n)
    space = UniversalSpace(D, r)
    x = _tuple(rng, space, G, 2 * rng.randrange(0, 4) + 1, rng.randrange(2))
    c = normal_form(D, random_closed_walk(rng, G, r, rng.randrange(0, 9))).vertices
    moved = [concat_reduce(c, e) for e in x]
    if psi(space, moved) != concat_reduce(c, psi(space, x)):
        return f"{name}: psi not covariant under {c}"
    return None


# ---------------------------------------------------------------------------
# covers

def check_lift_unique(rng):
    """The lift projects to the walk and each step is the only choice."""
    name, G, D = _fixture(rng, ["c5", "bowtie", "moser", "k_a", "k_b"])
    space = UniversalSpace(D, rng.randrange(G.n))
    W = random_walk(rng, G, space.root, rng.randrange(0, 10))
    lift = lift_word(space, space.root_vertex, W)
    if [space.tau(x) for x in lift] != list(W.vertices):
        return f"{name}: lift does not project to the walk"
    for x, y in zip(lift, lift[1:]):
        same = [w for v, w in space.neighbours(x) if v == space.tau(y)]
        if same != [y]:
            return f"{name}: {len(same)} lifts of one arc"
    return None


def check_lift_endpoint_stable(rng):
    """Walks related by a square or backtrack move lift to the same endpoint."""
    name, G, D = _fixture(rng, ["moser", "k_a", "k_b", "bowtie"])
    space = UniversalSpace(D, rng.randrange(G.n))
    W = random_walk(rng, G, space.root, rng.randrange(1, 10))
    W2 = Walk(G, diamond_move(rng, G, W.vertices))
    a = lift_word(space, space.root_vertex, W)[-1]
    b = lift_word(space, space.root_vertex, W2)[-1]
    if a != b:
        return f"{name}: {W.vertices} and {W2.vertices} lift to different ends"
    return None


@lru_cache(maxsize=None)
def _cover(name, root, radius):
    return universal_cover(fixtures.dismantling(name), root, radius)


def check_cover_walks_trivial(rng):
    """Closed walks of a truncated universal cover project to trivial classes."""
    name = rng.choice(["c5", "bowtie", "moser", "k_a"])
    C = _cover(name, 0, 4)
    start = rng.randrange(C.graph.n)
    W = random_closed_walk(rng, C.graph, start, rng.randrange(0, 10))
    base = Walk(C.base, [C.tau[i] for i in W.vertices])
    if not normal_form(C.context, base).is_trivial():
        return f"{name}: closed cover walk with nontrivial projection"
    return None


def check_cover_bipartite(rng):
    name = rng.choice(["c5", "c7", "bowtie", "moser", "k_a", "k_b"])
    G = fixtures.load(name)
    C = _cover(name, rng.randrange(G.n), rng.randrange(1, 5))
    if not C.graph.is_bipartite():
        return f"{name}: truncated cover is not bipartite"
    return None


# ---------------------------------------------------------------------------
# exponential graphs

@lru_cache(maxsize=None)
def _eps_components(name, n):
    """Partition ``K^{C_n}`` into components; record whether each is all-positive,
    all-negative or mixed with respect to eps_membership."""
    K, D = fixtures.load(name), fixtures.dismantling(name)
    comp_of, verdicts = {}, []
    for t in itertools.product(range(K.n), repeat=n):
        if t in comp_of:
            continue
        comp = exp_component(K, n, t, vertex_budget=K.n ** n)
        vals = set()
        for f in comp.tables:
            comp_of[f] = len(verdicts)
            for g in exp_neighbours(K, f):
                if f <= g:
                    vals.add(eps_membership(D, n, f, g))
        verdicts.append(vals)
    return comp_of, verdicts


def check_eps_closure(rng):
    """An eps-positive edge lies in a component all of whose edges are eps-positive."""
    name = rng.choice(["c5", "moser"])
    K, D = fixtures.load(name), fixtures.dismantling(name)
    f = tuple(rng.randrange(K.n) for _ in range(3))
    nb = exp_neighbours(K, f)
    if not nb:
        return None
    g = rng.choice(nb)
    if not eps_membership(D, 3, f, g):
        return None
    comp_of, verdicts = _eps_components(name, 3)
    if verdicts[comp_of[f]] != {True}:
        return f"{name}: eps edge {f}-{g} in a component with negative edges"
    return None


PROPERTIES = {
    "median-unique": check_median_unique,
    "median-contraction": check_median_contraction,
    "psi-order": check_psi_order_invariance,
    "psi-deck": check_psi_deck_covariance,
    "lift-unique": check_lift_unique,
    "lift-endpoint": check_lift_endpoint_stable,
    "cover-walks-trivial": check_cover_walks_trivial,
    "cover-bipartite": check_cover_bipartite,
    "eps-closure": check_eps_closure,
}


def run_property(name, cases=100, seed=0):
    """Run one property over ``cases`` seeds; return the list of failures."""
    fn = PROPERTIES[name]
    fails = []
    for s in range(seed, seed + cases):
        msg = fn(random.Random(s))
        if msg:
            fails.append((s, msg))
    return fails
