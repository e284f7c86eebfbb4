"""Tree medians, the median polymorphism and the homomorphisms built from it.

Tuples live in a universal cover.  Their median is taken in the kernel
tree, whose vertices are the reduced kernel words; the tree distance of two
words is read off their common prefix, so no tree is ever materialized.
"""

from __future__ import annotations

from dataclasses import dataclass

from .covers import CoverGraph, UniversalSpace, lift_word, tree_distance
from .errors import (
    ConsistencyError,
    IndeterminateAtBoundary,
    ModeError,
    NotInEpsilon,
)
from .graph import square_counts
from .homsearch import Hom
from .walks import arc_closed_walk, concat_reduce, normal_form

__all__ = [
    "tree_median",
    "WeightedTreeView",
    "median",
    "median_of",
    "psi",
    "monochromatic_part",
    "tuples_adjacent",
    "ObstructionWitness",
    "cyclic_hom",
    "Retraction",
    "retract_unicyclic",
]


# ---------------------------------------------------------------------------
# medians

def tree_median(tree, weights):
    """Median of a weight function on an explicit tree.

    Parameters
    ----------
    tree : Graph
        A tree.
    weights : sequence or dict
        Nonnegative integer weight per vertex, odd total.

    Returns the unique vertex ``m`` such that every component of
    ``tree - m`` carries at most half the total weight.

    >>> from homlab.graph import path_graph
    >>> tree_median(path_graph(5), [1, 0, 1, 0, 1])
    2
    """
    n = tree.n
    if tree.num_edges != n - 1 or not tree.is_connected():
        raise ValueError("not a tree")
    w = [weights.get(v, 0) for v in range(n)] if isinstance(weights, dict) else list(weights)
    total = sum(w)
    if total % 2 == 0:
        raise ValueError("total weight must be odd")
    half = total // 2
    for m in range(n):
        ok = True
        for s in tree.neighbours(m):
            # weight of the component of tree - m containing s
            seen = {m, s}
            stack = [s]
            acc = 0
            while stack:
                u = stack.pop()
                acc += w[u]
                for x in tree.neighbours(u):
                    if x not in seen:
                        seen.add(x)
                        stack.append(x)
            if acc > half:
                ok = False
                break
        if ok:
            return m
    raise AssertionError("a tree with odd total weight always has a median")


def median_of(entries, weights=None):
    """Median of words (all from one root) in the kernel tree.

    Walks down from the root while some child subtree holds a strict
    majority of the weight.
    """
    entries = [tuple(e) for e in entries]
    if weights is None:
        weights = [1] * len(entries)
    total = sum(weights)
    if total % 2 == 0:
        raise ValueError("total weight must be odd")
    root = entries[0][0]
    if any(e[0] != root for e in entries):
        raise ValueError("words must share their root")
    k = total // 2
    c = (root,)
    while True:
        L = len(c)
        counts = {}
        for e, w in zip(entries, weights):
            if w and len(e) > L and e[:L] == c:
                counts[e[L]] = counts.get(e[L], 0) + w
        heavy = [y for y, cnt in counts.items() if cnt > k]
        if not heavy:
            return c
        c = c + (heavy[0],)


@dataclass(frozen=True)
class WeightedTreeView:
    """Weights on the kernel tree of a universal cover.

    ``weights`` maps words to nonnegative integers with odd total.
    """

    cover: object
    weights: dict

    def __post_init__(self):
        if sum(self.weights.values()) % 2 == 0:
            raise ValueError("total weight must be odd")


def median(view):
    """Median of a :class:`WeightedTreeView`; checked against the orientation rule."""
    cover = view.cover
    items = [(tuple(w), c) for w, c in view.weights.items() if c]
    if isinstance(cover, CoverGraph):
        missing = [w for w, _ in items if w not in cover.index]
        if missing:
            raise IndeterminateAtBoundary(f"weight outside the truncation at {missing[0]!r}")
    m = median_of([w for w, _ in items], [c for _, c in items])
    half = sum(c for _, c in items) // 2
    # every edge at m points towards m: no component of T - m is heavier than half
    side = {}
    for w, c in items:
        if w == m:
            continue
        key = w[len(m)] if len(w) > len(m) and w[:len(m)] == m else None
        side[key] = side.get(key, 0) + c
    if any(v > half for v in side.values()):
        raise ConsistencyError("median orientation check failed")
    return m


# ---------------------------------------------------------------------------
# the polymorphism

def _space(cover):
    if isinstance(cover, CoverGraph):
        if cover.mode != "universal":
            raise ModeError("medians live in universal covers")
        return cover.space
    return cover


def monochromatic_part(space, x):
    """The entries in the colour class of odd size (all of ``x`` if monochromatic)."""
    cols = [space.colour(e) for e in x]
    c0 = [e for e, c in zip(x, cols) if c == 0]
    c1 = [e for e, c in zip(x, cols) if c == 1]
    return tuple(c0) if len(c0) % 2 else tuple(c1)


def _branch(mu, y):
    L = len(mu)
    if len(y) > L and y[:L] == mu:
        return y[L]
    return None  # the side containing the root


def _near(space, mu, depth=2):
    out = {mu}
    frontier = [mu]
    for _ in range(depth):
        nxt = []
        for w in frontier:
            for y in space.tree_neighbours(w):
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    out.discard(mu)
    return out


def _components_at(space, mu):
    """Union-find over the branches at ``mu`` joined by cover edges avoiding ``mu``."""
    parent = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in sorted(_near(space, mu)):
        for _, q in space.neighbours(p):
            if q != mu and tree_distance(q, mu) <= 2:
                a, b = find(_branch(mu, p)), find(_branch(mu, q))
                if a != b:
                    parent[max(a, b, key=_bkey)] = min(a, b, key=_bkey)
    return find


def _bkey(b):
    return (-1,) if b is None else (b,)


def psi(cover, x):
    """The median polymorphism on a tuple of cover vertices.

    Returns the median if it has the colour of the entries.  Otherwise the
    median is moved to a neighbour: inside the component of ``cover - mu``
    that holds a majority of the entries if there is one (a pair of square
    branches), else to the neighbour of least base vertex.  Tuples that are
    not monochromatic are first cut down to their odd colour class.
    """
    space = _space(cover)
    x = tuple(tuple(e) for e in x)
    if len(x) % 2 == 0:
        raise ValueError("tuples have odd length")
    x = monochromatic_part(space, x)
    colour = space.colour(x[0])
    mu = median_of(x)
    if space.colour(mu) == colour:
        return mu
    if isinstance(cover, CoverGraph) and len(mu) + 3 > cover.radius:
        raise IndeterminateAtBoundary("median too close to the truncation boundary")
    k = len(x) // 2
    find = _components_at(space, mu)
    counts = {}
    for e in x:
        c = find(_branch(mu, e))
        counts[c] = counts.get(c, 0) + 1
    nbrs = space.neighbours(mu)
    heavy = [c for c, cnt in counts.items() if cnt >= k + 1]
    if heavy:
        cands = [(v, w) for v, w in nbrs if find(_branch(mu, w)) == heavy[0]]
        if cands:
            return min(cands)[1]
    return min(nbrs)[1]


def tuples_adjacent(space, x, y):
    """Coordinatewise adjacency in the cover."""
    space = _space(space)
    for a, b in zip(x, y):
        if tuple(b) not in {w for _, w in space.neighbours(tuple(a))}:
            return False
    return len(x) == len(y)


# ---------------------------------------------------------------------------
# homomorphisms out of exponential-graph components

@dataclass
class ObstructionWitness:
    """An edge of the component whose two images are not adjacent."""

    edge: tuple
    tables: tuple
    lifts: tuple
    psi_values: tuple
    images: tuple

    def describe(self, K=None):
        lab = (lambda v: K.label(v)) if K is not None else str
        a, b = self.tables
        return (f"edge {self.edge}: {','.join(map(lab, a))} ~ {','.join(map(lab, b))} "
                f"maps to {lab(self.images[0])}, {lab(self.images[1])} (not adjacent)")


def _tuple_from_lift(words, n):
    return tuple(words[i if i % 2 == 0 else i + n] for i in range(n))


def _lift_vertex(space, K, n, h, h2, start):
    W = arc_closed_walk(K, n, h, h2)
    words = lift_word(space, start, W)
    if words[-1] != words[0]:
        raise NotInEpsilon("closed walk does not lift to a closed walk")
    return _tuple_from_lift(words, n)


def _kernel_cycle(D, r):
    """A nontrivial closed kernel word at ``r`` (or None for a forest)."""
    L = D.kernel
    for u, v in L.edge_list():
        rest = L.remove_edges([(u, v)])
        p = rest.shortest_path(v, u)
        if p is not None:
            to_u = L.shortest_path(r, u)
            return concat_reduce(concat_reduce(to_u, (u,) + p), to_u[::-1])
    return None


def cyclic_hom(K, D, n, component, cross_check=True):
    """Homomorphism from a component of the exponential graph ``K^{C_n}`` to ``K``.

    Each vertex ``h`` is lifted to a tuple of the universal cover through the
    closed walk of one of its edges, the polymorphism :func:`psi` is applied
    and the result projected back to ``K``.  The assembled map is validated
    edge by edge; a failing edge is returned as an :class:`ObstructionWitness`.

    Parameters
    ----------
    component : object with ``graph`` and ``tables``
        ``tables[i]`` is the function table of vertex ``i`` of ``graph``.
    cross_check : bool
        Also evaluate a second, independent lift of every vertex and raise
        ConsistencyError if the two values differ.
    """
    if n % 2 == 0:
        raise ValueError("n must be odd")
    G = component.graph
    tables = [tuple(t) for t in component.tables]
    r0 = 0
    space = UniversalSpace(D, r0)
    for a, b in G.edge_list():
        W = arc_closed_walk(K, n, tables[a], tables[b])
        if not normal_form(D, W).is_trivial():
            raise NotInEpsilon(f"edge {a}-{b} has a nontrivial closed walk")
    paths = {}

    def start(v):
        if v not in paths:
            paths[v] = tuple(D.kernel.shortest_path(r0, v))
        return paths[v]

    shift = _kernel_cycle(D, r0) if cross_check else None
    mapping, lifts, values = [], [], []
    for h in range(G.n):
        t = tables[h]
        nb = sorted(G.neighbours(h))
        if not nb:
            mapping.append(t[0])
            lifts.append(None)
            values.append(None)
            continue
        x = _lift_vertex(space, K, n, t, tables[nb[0]], start(t[0]))
        p = psi(space, x)
        mapping.append(p[-1])
        lifts.append(x)
        values.append(p)
        if cross_check:
            if len(nb) > 1:
                x2 = _lift_vertex(space, K, n, t, tables[nb[1]], start(t[0]))
            elif shift is not None:
                x2 = _lift_vertex(space, K, n, t, tables[nb[0]], concat_reduce(shift, start(t[0])))
            else:
                x2 = None
            if x2 is not None and psi(space, x2)[-1] != p[-1]:
                raise ConsistencyError(f"two lifts of vertex {h} give different images")
    hom = Hom(G, K, tuple(mapping))
    bad = hom.violations()
    if bad:
        a, b = bad[0]
        return ObstructionWitness((a, b), (tables[a], tables[b]), (lifts[a], lifts[b]),
                                  (values[a], values[b]), (mapping[a], mapping[b]))
    return hom


# ---------------------------------------------------------------------------
# retraction of unicyclic covers

@dataclass
class Retraction:
    """A retraction of a unicyclic cover onto an odd cycle."""

    hom: Hom
    cycle: tuple  # vertex ids in cyclic order


def retract_unicyclic(C):
    """Retract a truncated unicyclic cover onto an odd cycle.

    The map is the composite of three steps: fold every vertex to within
    distance one of the central cycle, keeping parity (anchor map); push the
    remaining off-cycle vertices onto the cycle, towards the side where they
    have a second neighbour; finally fold away pairs of degree-two cycle
    vertices that are bridged by a chord.
    """
    if not isinstance(C, CoverGraph) or C.mode != "unicyclic":
        raise ModeError("retraction needs a unicyclic cover")
    if max(square_counts(C.base).values(), default=0) > 1:
        raise ModeError("base has an edge in more than one square")
    S = C.space
    m = S.k
    G = C.graph
    axis = [C.index[S.Z[:i + 1]] for i in range(m)]
    split = [S.split(w) for w in C.vertices]

    # anchor map
    phi = []
    for i, w in enumerate(C.vertices):
        a, T = split[i]
        d = len(T) - 1
        if d % 2 == 0:
            phi.append(axis[a])
        else:
            phi.append(C.index[S.Z[:a + 1] + (T[1],)])

    # onto the cycle
    image = set(phi)
    psi1 = {}
    for v in image:
        a, T = split[v]
        if len(T) == 1:
            psi1[v] = v
            continue
        linked = any(w in image and split[w][0] in ((a + 1) % m, (a + 2) % m) and w != axis[a]
                     for w in G.neighbours(v))
        psi1[v] = axis[(a + 1) % m] if linked else axis[(a - 1) % m]
    f = [psi1[phi[v]] for v in range(G.n)]

    # chord elimination
    cyc = list(axis)
    while True:
        cur = set(cyc)
        deg = {u: sum(1 for x in G.neighbours(u) if x in cur) for u in cyc}
        L = len(cyc)
        done = True
        for j in range(L):
            a, b, c, d = cyc[j], cyc[(j + 1) % L], cyc[(j + 2) % L], cyc[(j + 3) % L]
            if L > 3 and G.has_edge(a, d) and deg[b] == 2 and deg[c] == 2:
                move = {b: d, c: a}
                f = [move.get(y, y) for y in f]
                cyc = [u for u in cyc if u not in (b, c)]
                done = False
                break
        if done:
            break
    hom = Hom(G, G, tuple(f))
    bad = hom.violations()
    if bad:
        raise ConsistencyError(f"retraction fails on edge {bad[0]}")
    img = set(f)
    if any(f[u] != u for u in img) or img != set(cyc):
        raise ConsistencyError("map is not the identity on its image")
    sub, _ = G.induced_subgraph(cyc)
    if len(cyc) % 2 == 0 or sub.num_edges != len(cyc) or any(sub.degree(v) != 2 for v in range(sub.n)):
        raise ConsistencyError("image is not an odd cycle")
    return Retraction(hom, tuple(cyc))
